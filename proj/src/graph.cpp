#include "pcp/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <tuple>

#include "pcp/errors.hpp"

namespace pcp {

ColoredMultiDigraph ColoredMultiDigraph::build(int color_count, int vertex_count,
                                               const std::vector<ArcSpec>& specs) {
  if (color_count < 2) throw InputError("color count must be at least 2");
  if (vertex_count < 1) throw InputError("vertex count must be at least 1");

  ColoredMultiDigraph g;
  g.colors_ = color_count;
  g.n_ = vertex_count;
  g.arcs_.reserve(specs.size());
  g.out_.assign(vertex_count, {});
  g.in_.assign(vertex_count, {});
  g.out_by_color_.assign(vertex_count, std::vector<std::vector<int>>(color_count));
  g.in_by_color_.assign(vertex_count, std::vector<std::vector<int>>(color_count));

  for (std::size_t k = 0; k < specs.size(); ++k) {
    const ArcSpec& s = specs[k];
    const std::string where = "arc " + std::to_string(k + 1) + ": ";
    if (s.tail < 0 || s.tail >= vertex_count || s.head < 0 || s.head >= vertex_count) {
      throw InputError(where + "endpoint out of range");
    }
    if (s.tail == s.head) throw InputError(where + "self-loops are not allowed");
    if (s.color < 1 || s.color > color_count) throw InputError(where + "color out of range");
    if (s.weight < 0) throw InputError(where + "negative weight");

    int id = static_cast<int>(g.arcs_.size());
    g.arcs_.push_back(Arc{s.tail, s.head, s.color, s.weight, id});
    g.out_[s.tail].push_back(id);
    g.in_[s.head].push_back(id);
    g.out_by_color_[s.tail][s.color - 1].push_back(id);
    g.in_by_color_[s.head][s.color - 1].push_back(id);
  }
  return g;
}

Rational ColoredMultiDigraph::total_weight() const {
  Rational sum = 0;
  for (const Arc& a : arcs_) sum += a.weight;
  return sum;
}

int ColoredMultiDigraph::multiplicity(int arc_id) const {
  if (arc_id < 0 || arc_id >= arc_count()) throw InputError("unknown arc id");
  const Arc& a = arcs_[arc_id];
  int count = 0;
  for (int id : out_by_color_[a.tail][a.color - 1]) {
    if (arcs_[id].head == a.head) ++count;
  }
  return count;
}

ColoredMultiDigraph ColoredMultiDigraph::with_added_copies(const std::vector<int>& arc_ids) const {
  std::vector<ArcSpec> specs;
  specs.reserve(arcs_.size() + arc_ids.size());
  for (const Arc& a : arcs_) specs.push_back(ArcSpec{a.tail, a.head, a.color, a.weight});
  for (int id : arc_ids) {
    if (id < 0 || id >= arc_count()) throw InputError("unknown arc id");
    const Arc& a = arcs_[id];
    specs.push_back(ArcSpec{a.tail, a.head, a.color, a.weight});
  }
  ColoredMultiDigraph g = build(colors_, n_, specs);
  for (std::size_t k = 0; k < arc_ids.size(); ++k) {
    g.arcs_[arcs_.size() + k].origin = arcs_[arc_ids[k]].origin;
  }
  return g;
}

void ColoredMultiDigraph::audit() const {
  std::vector<int> seen_out(arc_count(), 0), seen_in(arc_count(), 0);
  for (int v = 0; v < n_; ++v) {
    for (int id : out_[v]) {
      if (id < 0 || id >= arc_count() || arcs_[id].tail != v) {
        throw InvariantViolation("out index disagrees with arc list at vertex " + std::to_string(v));
      }
      ++seen_out[id];
    }
    for (int id : in_[v]) {
      if (id < 0 || id >= arc_count() || arcs_[id].head != v) {
        throw InvariantViolation("in index disagrees with arc list at vertex " + std::to_string(v));
      }
      ++seen_in[id];
    }
    for (int c = 1; c <= colors_; ++c) {
      for (int id : out_by_color_[v][c - 1]) {
        if (arcs_[id].tail != v || arcs_[id].color != c) {
          throw InvariantViolation("per-color out index mismatch at vertex " + std::to_string(v));
        }
      }
      for (int id : in_by_color_[v][c - 1]) {
        if (arcs_[id].head != v || arcs_[id].color != c) {
          throw InvariantViolation("per-color in index mismatch at vertex " + std::to_string(v));
        }
      }
    }
  }
  for (int id = 0; id < arc_count(); ++id) {
    if (seen_out[id] != 1 || seen_in[id] != 1) {
      throw InvariantViolation("arc " + std::to_string(id) + " not indexed exactly once");
    }
    if (arcs_[id].origin < 0 || arcs_[id].origin >= arc_count()) {
      throw InvariantViolation("arc " + std::to_string(id) + " has an out-of-range origin");
    }
  }
}

DegreeProfile degree_profile(const ColoredMultiDigraph& g) {
  DegreeProfile p;
  p.in_deg.assign(g.color_count(), std::vector<int>(g.vertex_count(), 0));
  p.out_deg.assign(g.color_count(), std::vector<int>(g.vertex_count(), 0));
  p.in_total.assign(g.vertex_count(), 0);
  p.out_total.assign(g.vertex_count(), 0);
  for (const Arc& a : g.arcs()) {
    ++p.out_deg[a.color - 1][a.tail];
    ++p.in_deg[a.color - 1][a.head];
    ++p.out_total[a.tail];
    ++p.in_total[a.head];
  }
  return p;
}

BalanceReport is_color_balanced(const ColoredMultiDigraph& g) {
  DegreeProfile p = degree_profile(g);
  int c = g.color_count();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (c == 2) {
      for (int i = 1; i <= 2; ++i) {
        if (p.out_deg[i - 1][v] != p.in_deg[2 - i][v]) return {false, v, i};
      }
      continue;
    }
    if (p.in_total[v] != p.out_total[v]) return {false, v, 0};
    for (int i = 1; i <= c; ++i) {
      if (p.out_deg[i - 1][v] > p.in_total[v] - p.in_deg[i - 1][v]) return {false, v, i};
      if (p.in_deg[i - 1][v] > p.out_total[v] - p.out_deg[i - 1][v]) return {false, v, i};
    }
  }
  return {true, -1, -1};
}

ColoredMultiDigraph double_subdivide(const ColoredMultiDigraph& g) {
  if (g.color_count() != 2) throw InputError("double_subdivide supports exactly 2 colors");

  // First id seen per parallel class; later copies get expanded.
  std::map<std::tuple<int, int, int>, int> first_of_class;
  for (int id = 0; id < g.arc_count(); ++id) {
    const Arc& a = g.arc(id);
    first_of_class.emplace(std::make_tuple(a.tail, a.head, a.color), id);
  }

  std::vector<ArcSpec> specs;
  int next_vertex = g.vertex_count();
  for (int id = 0; id < g.arc_count(); ++id) {
    const Arc& a = g.arc(id);
    if (first_of_class[std::make_tuple(a.tail, a.head, a.color)] == id) {
      specs.push_back(ArcSpec{a.tail, a.head, a.color, a.weight});
      continue;
    }
    int u = next_vertex++;
    int uprime = next_vertex++;
    specs.push_back(ArcSpec{a.tail, u, a.color, Rational(0)});
    specs.push_back(ArcSpec{u, uprime, 3 - a.color, a.weight});
    specs.push_back(ArcSpec{uprime, a.head, a.color, Rational(0)});
  }
  return ColoredMultiDigraph::build(2, next_vertex, specs);
}

StrongLocalReport strong_and_local_check(const ColoredMultiDigraph& g) {
  if (g.arc_count() < 2) throw InputError("strong_and_local_check needs at least 2 arcs");

  StrongLocalReport r;

  // Strong connectivity over non-isolated vertices: forward + reverse BFS.
  std::vector<char> active(g.vertex_count(), 0);
  int seed = -1;
  for (const Arc& a : g.arcs()) {
    active[a.tail] = active[a.head] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (active[v]) {
      seed = v;
      break;
    }
  }
  auto bfs = [&](bool forward) {
    std::vector<char> vis(g.vertex_count(), 0);
    std::queue<int> q;
    vis[seed] = 1;
    q.push(seed);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int id : forward ? g.out_arcs(v) : g.in_arcs(v)) {
        int w = forward ? g.arc(id).head : g.arc(id).tail;
        if (!vis[w]) {
          vis[w] = 1;
          q.push(w);
        }
      }
    }
    return vis;
  };
  std::vector<char> fwd = bfs(true), rev = bfs(false);
  r.strongly_connected = true;
  for (int v = 0; v < g.vertex_count() && r.strongly_connected; ++v) {
    if (!active[v]) continue;
    if (!fwd[v]) {
      r.strongly_connected = false;
      r.unreachable_from = seed;
      r.unreachable_to = v;
    } else if (!rev[v]) {
      r.strongly_connected = false;
      r.unreachable_from = v;
      r.unreachable_to = seed;
    }
  }

  DegreeProfile p = degree_profile(g);
  r.colors_ok = true;
  for (int v = 0; v < g.vertex_count() && r.colors_ok; ++v) {
    for (int i = 1; i <= g.color_count() && r.colors_ok; ++i) {
      if (p.in_deg[i - 1][v] > 0 && p.out_total[v] - p.out_deg[i - 1][v] == 0) {
        r.colors_ok = false;
        r.vertex = v;
        r.color = i;
        r.missing_out = true;
      } else if (p.out_deg[i - 1][v] > 0 && p.in_total[v] - p.in_deg[i - 1][v] == 0) {
        r.colors_ok = false;
        r.vertex = v;
        r.color = i;
        r.missing_out = false;
      }
    }
  }
  return r;
}

}  // namespace pcp
