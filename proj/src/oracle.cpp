#include "pcp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>

#include "pcp/errors.hpp"

namespace pcp {
namespace oracle {

namespace {

void require_size(const ColoredMultiDigraph& g, int limit, const char* what) {
  if (g.arc_count() > limit) {
    throw InputError(std::string(what) + " refuses instances with more than " +
                     std::to_string(limit) + " arcs (got " +
                     std::to_string(g.arc_count()) + ")");
  }
}

}  // namespace

// Least-cost-first search over (vertex, last color, covered set) states.
// Every covering closed walk can be rotated to start with arc 0, so the
// search fixes that start; acceptance = all arcs covered, back at arc 0's
// tail, and the last color differs from arc 0's color (the wrap-around).
std::optional<WalkResult> min_cover_walk(const ColoredMultiDigraph& g) {
  if (g.arc_count() < 1) throw InputError("covering walks need at least 1 arc");
  require_size(g, kMinCoverWalkArcLimit, "the cover-walk oracle");

  const int m = g.arc_count();
  const std::uint32_t full = (std::uint32_t(1) << m) - 1;
  const std::int64_t n = g.vertex_count();
  const std::int64_t c = g.color_count();

  struct State {
    Rational dist;
    int steps = 0;
    int parent = -1;
    int via_arc = -1;
    bool settled = false;
  };
  std::vector<State> states;
  std::unordered_map<std::int64_t, int> by_key;
  auto state_for = [&](int v, int color, std::uint32_t covered) {
    std::int64_t key = (std::int64_t(covered) * c + (color - 1)) * n + v;
    auto [it, fresh] = by_key.try_emplace(key, static_cast<int>(states.size()));
    if (fresh) states.emplace_back();
    return it->second;
  };

  // dist, steps, insertion order, state
  using Entry = std::tuple<Rational, int, std::uint64_t, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
  std::uint64_t ticket = 0;

  auto relax = [&](int idx, const Rational& d, int st, int from, int arc) {
    State& s = states[idx];
    if (s.via_arc >= 0 && std::tie(s.dist, s.steps) <= std::tie(d, st)) return;
    s.dist = d;
    s.steps = st;
    s.parent = from;
    s.via_arc = arc;
    pq.emplace(d, st, ticket++, idx);
  };

  const Arc& first = g.arc(0);
  relax(state_for(first.head, first.color, 1u), first.weight, 1, -1, 0);

  while (!pq.empty()) {
    auto [d, st, tk, idx] = pq.top();
    pq.pop();
    if (states[idx].settled) continue;
    states[idx].settled = true;

    // Decode the state where it was created: cheaper to re-derive from via_arc.
    const Arc& in_arc = g.arc(states[idx].via_arc);
    int v = in_arc.head;
    int color = in_arc.color;
    std::uint32_t covered = 0;
    for (int x = idx; x >= 0; x = states[x].parent) covered |= std::uint32_t(1) << states[x].via_arc;

    if (covered == full && v == first.tail && color != first.color) {
      WalkResult r;
      r.weight = d;
      for (int x = idx; x >= 0; x = states[x].parent) r.arc_ids.push_back(states[x].via_arc);
      std::reverse(r.arc_ids.begin(), r.arc_ids.end());
      return r;
    }
    for (int f : g.out_arcs(v)) {
      const Arc& a = g.arc(f);
      if (a.color == color) continue;
      relax(state_for(a.head, a.color, covered | (std::uint32_t(1) << f)),
            d + a.weight, st + 1, idx, f);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> euler_trail(const ColoredMultiDigraph& g) {
  if (g.arc_count() == 0) return std::nullopt;
  require_size(g, kTrailSearchArcLimit, "the Euler-trail oracle");

  const int m = g.arc_count();
  const std::uint32_t full = (std::uint32_t(1) << m) - 1;
  std::vector<int> seq{0};
  const Arc& first = g.arc(0);

  // A closed trail can be rotated to start with arc 0, so only that start is
  // explored; ascending continuation order yields the lexicographically
  // smallest witness.
  auto extend = [&](auto&& self, std::uint32_t used, int last) -> bool {
    const Arc& prev = g.arc(last);
    if (used == full) return prev.head == first.tail && prev.color != first.color;
    for (int f : g.out_arcs(prev.head)) {
      if (used & (std::uint32_t(1) << f)) continue;
      if (g.arc(f).color == prev.color) continue;
      seq.push_back(f);
      if (self(self, used | (std::uint32_t(1) << f), f)) return true;
      seq.pop_back();
    }
    return false;
  };
  if (extend(extend, 1u, 0)) return seq;
  return std::nullopt;
}

std::optional<WalkResult> min_fev_trail(const ColoredMultiDigraph& g, int s, int t,
                                        ColorSet start_colors, ColorSet end_colors) {
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count()) {
    throw InputError("vertex out of range");
  }
  require_size(g, kTrailSearchArcLimit, "the trail oracle");

  std::optional<WalkResult> best;
  int best_steps = 0;
  std::vector<int> seq;
  Rational weight = 0;

  auto extend = [&](auto&& self, std::uint32_t used, int last) -> void {
    const Arc& prev = g.arc(last);
    if (prev.head == t && end_colors.allows(prev.color)) {
      int steps = static_cast<int>(seq.size());
      if (!best || std::tie(weight, steps) < std::tie(best->weight, best_steps)) {
        best = WalkResult{weight, seq};
        best_steps = steps;
      }
    }
    for (int f : g.out_arcs(prev.head)) {
      if (used & (std::uint32_t(1) << f)) continue;
      const Arc& a = g.arc(f);
      if (a.color == prev.color) continue;
      seq.push_back(f);
      weight += a.weight;
      self(self, used | (std::uint32_t(1) << f), f);
      weight -= a.weight;
      seq.pop_back();
    }
  };

  for (int f : g.out_arcs(s)) {
    const Arc& a = g.arc(f);
    if (!start_colors.allows(a.color)) continue;
    seq.assign(1, f);
    weight = a.weight;
    extend(extend, std::uint32_t(1) << f, f);
  }
  return best;
}

bool trail_connected(const ColoredMultiDigraph& g) {
  if (g.arc_count() < 1) throw InputError("trail-connectivity needs at least 1 arc");
  require_size(g, kTrailSearchArcLimit, "the connectivity oracle");

  const int m = g.arc_count();
  const std::uint32_t full = (std::uint32_t(1) << m) - 1;
  std::vector<char> seen(static_cast<std::size_t>(m) << m);

  for (int f1 = 0; f1 < m; ++f1) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint32_t reach = 0;
    std::vector<std::pair<int, std::uint32_t>> stack{{f1, std::uint32_t(1) << f1}};
    seen[(std::size_t(f1) << m) | (std::uint32_t(1) << f1)] = 1;
    while (!stack.empty()) {
      auto [last, used] = stack.back();
      stack.pop_back();
      reach |= std::uint32_t(1) << last;
      const Arc& prev = g.arc(last);
      for (int f : g.out_arcs(prev.head)) {
        if (used & (std::uint32_t(1) << f)) continue;
        if (g.arc(f).color == prev.color) continue;
        std::size_t key = (std::size_t(f) << m) | (used | (std::uint32_t(1) << f));
        if (seen[key]) continue;
        seen[key] = 1;
        stack.emplace_back(f, used | (std::uint32_t(1) << f));
      }
    }
    if (reach != full) return false;
  }
  return true;
}

}  // namespace oracle
}  // namespace pcp
