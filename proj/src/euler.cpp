#include "pcp/euler.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "pcp/errors.hpp"

namespace pcp {

void validate_circuit(const ColoredMultiDigraph& g, const Circuit& c) {
  if (c.arc_ids.empty()) throw InvariantViolation("circuit has no arcs");
  Trail::from_arcs(g, c.arc_ids);  // trail conditions: incidence, colors, no repeats
  const Arc& first = g.arc(c.arc_ids.front());
  const Arc& last = g.arc(c.arc_ids.back());
  if (last.head != first.tail) throw InvariantViolation("circuit is not closed");
  if (last.color == first.color) throw InvariantViolation("circuit repeats a color at the wrap");
  std::vector<std::vector<int>> out_count(g.vertex_count(), std::vector<int>(g.color_count(), 0));
  for (int id : c.arc_ids) {
    const Arc& a = g.arc(id);
    if (++out_count[a.tail][a.color - 1] > 1) {
      throw InvariantViolation("circuit has two out-arcs of one color at vertex " +
                               std::to_string(a.tail));
    }
  }
}

Circuit rotate_circuit(const Circuit& c, int start_pos) {
  if (start_pos < 0 || start_pos >= static_cast<int>(c.arc_ids.size())) {
    throw InputError("rotation start out of range");
  }
  Circuit r;
  r.arc_ids.reserve(c.arc_ids.size());
  r.arc_ids.insert(r.arc_ids.end(), c.arc_ids.begin() + start_pos, c.arc_ids.end());
  r.arc_ids.insert(r.arc_ids.end(), c.arc_ids.begin(), c.arc_ids.begin() + start_pos);
  return r;
}

CircuitDecomposition decompose_into_circuits(const ColoredMultiDigraph& g) {
  if (g.color_count() != 2) throw InputError("circuit decomposition supports exactly 2 colors");
  if (!is_color_balanced(g).balanced) {
    throw InputError("circuit decomposition requires a color-balanced graph");
  }

  const int m = g.arc_count();
  CircuitDecomposition deco;
  deco.circuit_of.assign(m, -1);

  std::vector<char> traversed(m, 0), on_trail(m, 0);
  std::vector<int> trail;  // the growing trail R
  std::vector<int> on_trail_vertex(g.vertex_count(), 0);
  std::vector<std::array<int, 2>> out_on_trail(g.vertex_count(), {0, 0});

  auto push_arc = [&](int f) {
    const Arc& a = g.arc(f);
    trail.push_back(f);
    on_trail[f] = 1;
    ++on_trail_vertex[a.tail];
    ++on_trail_vertex[a.head];
    ++out_on_trail[a.tail][a.color - 1];
  };

  int remaining = m;
  int cursor = 0;
  while (remaining > 0) {
    if (trail.empty()) {
      while (traversed[cursor]) ++cursor;
      push_arc(cursor);
      continue;
    }
    const Arc& last = g.arc(trail.back());
    const int need = 3 - last.color;
    int next = -1;
    for (int f : g.out_arcs(last.head, need)) {
      if (!traversed[f] && !on_trail[f]) {
        next = f;
        break;
      }
    }
    if (next < 0) {
      throw InvariantViolation("trail growth stalled on a balanced graph");
    }
    const Arc& a = g.arc(next);
    const bool seen_head = on_trail_vertex[a.head] > 0;
    push_arc(next);
    // Closure: the entered vertex already sends the opposite color from the
    // trail, so the suffix from that out-arc through the new arc is a circuit.
    if (!seen_head || out_on_trail[a.head][(3 - a.color) - 1] == 0) continue;
    int start = -1;
    for (int j = static_cast<int>(trail.size()) - 1; j >= 0; --j) {
      const Arc& b = g.arc(trail[j]);
      if (b.tail == a.head && b.color == 3 - a.color) {
        start = j;
        break;
      }
    }
    if (start < 0) throw InvariantViolation("closure detected without a cut point");
    Circuit c;
    c.arc_ids.assign(trail.begin() + start, trail.end());
    for (int f : c.arc_ids) {
      const Arc& b = g.arc(f);
      traversed[f] = 1;
      on_trail[f] = 0;
      --on_trail_vertex[b.tail];
      --on_trail_vertex[b.head];
      --out_on_trail[b.tail][b.color - 1];
      deco.circuit_of[f] = static_cast<int>(deco.circuits.size());
    }
    trail.resize(start);
    remaining -= static_cast<int>(c.arc_ids.size());
    validate_circuit(g, c);
    deco.circuits.push_back(std::move(c));
  }
  if (!trail.empty()) throw InvariantViolation("leftover trail after decomposition");
  return deco;
}

CircuitDecomposition build_circuit_graph(const ColoredMultiDigraph& g, CircuitDecomposition deco) {
  deco.links.clear();
  const int s = static_cast<int>(deco.circuits.size());

  // out_deg[i][v][k-1] per circuit, only for vertices the circuit touches.
  std::vector<std::vector<std::array<int, 2>>> out_deg(
      s, std::vector<std::array<int, 2>>(g.vertex_count(), {0, 0}));
  for (int i = 0; i < s; ++i) {
    for (int f : deco.circuits[i].arc_ids) {
      const Arc& a = g.arc(f);
      ++out_deg[i][a.tail][a.color - 1];
    }
  }
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        int color = 0;
        for (int k = 1; k <= 2; ++k) {
          if (out_deg[i][v][k - 1] == 1 && out_deg[j][v][k - 1] == 1) {
            color = k;
            break;
          }
        }
        if (color) {
          deco.links.push_back(CircuitLink{i, j, v, color});
          break;
        }
      }
    }
  }
  return deco;
}

namespace {

// Splices circuit `c` (already rotated to leave `vertex` with color `k`) into
// the walk right after an arc of the host circuit entering `vertex` with
// color 3-k.
void splice(const ColoredMultiDigraph& g, std::vector<int>& walk,
            const std::vector<char>& host, int vertex, int k, const Circuit& c) {
  for (std::size_t pos = 0; pos < walk.size(); ++pos) {
    const Arc& a = g.arc(walk[pos]);
    if (!host[walk[pos]] || a.head != vertex || a.color != 3 - k) continue;
    walk.insert(walk.begin() + pos + 1, c.arc_ids.begin(), c.arc_ids.end());
    return;
  }
  throw InvariantViolation("no splice point for a circuit at vertex " + std::to_string(vertex));
}

}  // namespace

std::optional<ClosedWalk> pc_euler_trail(const ColoredMultiDigraph& g) {
  if (g.color_count() != 2) throw InputError("Euler construction supports exactly 2 colors");
  if (g.arc_count() == 0) return std::nullopt;
  if (!is_color_balanced(g).balanced) return std::nullopt;
  ArcGraph ag(g);
  if (!is_pc_trail_connected(ag).connected) return std::nullopt;

  CircuitDecomposition deco = build_circuit_graph(g, decompose_into_circuits(g));
  const int s = static_cast<int>(deco.circuits.size());
  std::vector<std::vector<std::pair<int, int>>> adj(s);  // neighbor, link index
  for (std::size_t e = 0; e < deco.links.size(); ++e) {
    adj[deco.links[e].a].emplace_back(deco.links[e].b, static_cast<int>(e));
    adj[deco.links[e].b].emplace_back(deco.links[e].a, static_cast<int>(e));
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::vector<int> walk = deco.circuits[0].arc_ids;
  std::vector<char> visited(s, 0);
  visited[0] = 1;

  // Iterative DFS over circuits; each tree edge splices the newly visited
  // circuit into the walk inside its parent.
  std::vector<std::pair<int, std::size_t>> dfs{{0, 0}};
  while (!dfs.empty()) {
    auto& [i, child] = dfs.back();
    if (child >= adj[i].size()) {
      dfs.pop_back();
      continue;
    }
    auto [j, e] = adj[i][child++];
    if (visited[j]) continue;
    visited[j] = 1;
    const CircuitLink& link = deco.links[e];
    const Circuit& cj = deco.circuits[j];
    int start = -1;
    for (std::size_t pos = 0; pos < cj.arc_ids.size(); ++pos) {
      const Arc& a = g.arc(cj.arc_ids[pos]);
      if (a.tail == link.vertex && a.color == link.color) {
        start = static_cast<int>(pos);
        break;
      }
    }
    if (start < 0) throw InvariantViolation("link color missing from the joined circuit");
    std::vector<char> host(g.arc_count(), 0);
    for (int f : deco.circuits[i].arc_ids) host[f] = 1;
    splice(g, walk, host, link.vertex, link.color, rotate_circuit(cj, start));
    ClosedWalk partial{walk, Rational(0)};
    for (int f : walk) partial.total_weight += g.arc(f).weight;
    WalkCheck check = verify_closed_pc_walk(g, partial, false, true);
    if (!check.ok) throw InvariantViolation("splice broke the trail: " + check.violation);
    dfs.emplace_back(j, 0);
  }
  for (int i = 0; i < s; ++i) {
    if (!visited[i]) {
      throw InvariantViolation("circuit adjacency disconnected on a trail-connected graph");
    }
  }

  ClosedWalk result{std::move(walk), g.total_weight()};
  WalkCheck check = verify_closed_pc_walk(g, result, true, true);
  if (!check.ok) throw InvariantViolation("constructed walk invalid: " + check.violation);
  return result;
}

std::optional<std::vector<int>> is_bad_circuit(const ColoredMultiDigraph& g, const Circuit& c) {
  validate_circuit(g, c);
  std::vector<char> in_c(g.arc_count(), 0);
  for (int f : c.arc_ids) in_c[f] = 1;

  // Union-find over vertices, joined by the arcs outside C.
  std::vector<int> root(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) root[v] = v;
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (int f = 0; f < g.arc_count(); ++f) {
    if (in_c[f]) continue;
    root[find(g.arc(f).tail)] = find(g.arc(f).head);
  }

  std::vector<std::array<int, 2>> out_c(g.vertex_count(), {0, 0});
  std::vector<char> in_vc(g.vertex_count(), 0);
  for (int f : c.arc_ids) {
    const Arc& a = g.arc(f);
    ++out_c[a.tail][a.color - 1];
    in_vc[a.tail] = in_vc[a.head] = 1;
  }

  // Components ordered by their smallest arc id.
  std::vector<int> comp_order;
  std::vector<std::vector<int>> comp_arcs(g.vertex_count());
  for (int f = 0; f < g.arc_count(); ++f) {
    if (in_c[f]) continue;
    int r = find(g.arc(f).tail);
    if (comp_arcs[r].empty()) comp_order.push_back(r);
    comp_arcs[r].push_back(f);
  }
  for (int r : comp_order) {
    std::vector<std::array<int, 2>> out_d(g.vertex_count(), {0, 0});
    std::vector<char> in_vd(g.vertex_count(), 0);
    for (int f : comp_arcs[r]) {
      const Arc& a = g.arc(f);
      ++out_d[a.tail][a.color - 1];
      in_vd[a.tail] = in_vd[a.head] = 1;
    }
    bool bad = true;
    for (int v = 0; v < g.vertex_count() && bad; ++v) {
      if (!in_vc[v] || !in_vd[v]) continue;
      int m1 = out_c[v][0] + out_d[v][0];
      int m2 = out_c[v][1] + out_d[v][1];
      if (m1 > 1 || m2 > 1) bad = false;
    }
    if (bad) return comp_arcs[r];
  }
  return std::nullopt;
}

WalkCheck verify_closed_pc_walk(const ColoredMultiDigraph& g, const ClosedWalk& walk,
                                bool require_cover_all, bool require_trail) {
  const std::vector<int>& w = walk.arc_ids;
  if (w.empty()) return {false, "empty walk"};
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] < 0 || w[k] >= g.arc_count()) {
      return {false, "unknown arc id " + std::to_string(w[k] + 1) + " at position " +
                         std::to_string(k)};
    }
  }
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (g.arc(w[k - 1]).color == g.arc(w[k]).color) {
      return {false, "color repeat at position " + std::to_string(k)};
    }
  }
  if (w.size() > 1 && g.arc(w.back()).color == g.arc(w.front()).color) {
    return {false, "color repeat at position 0"};
  }
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (g.arc(w[k - 1]).head != g.arc(w[k]).tail) {
      return {false, "incidence break at position " + std::to_string(k)};
    }
  }
  if (g.arc(w.back()).head != g.arc(w.front()).tail) {
    return {false, "walk is not closed"};
  }
  if (require_trail) {
    std::vector<char> used(g.arc_count(), 0);
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (used[w[k]]) {
        return {false, "arc repeat at position " + std::to_string(k)};
      }
      used[w[k]] = 1;
    }
  }
  if (require_cover_all) {
    std::vector<char> covered(g.arc_count(), 0);
    for (int f : w) covered[f] = 1;
    for (int f = 0; f < g.arc_count(); ++f) {
      if (!covered[f]) return {false, "arc " + std::to_string(f + 1) + " not covered"};
    }
  }
  Rational actual = 0;
  for (int f : w) actual += g.arc(f).weight;
  if (actual != walk.total_weight) {
    return {false, "weight mismatch: stated " + format_rational(walk.total_weight) +
                       ", actual " + format_rational(actual)};
  }
  return {true, ""};
}

}  // namespace pcp
