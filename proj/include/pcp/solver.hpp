#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "pcp/arc_graph.hpp"
#include "pcp/graph.hpp"
#include "pcp/trail.hpp"

namespace pcp {

// How many outgoing (out_deficit) / incoming (in_deficit) arcs of each color
// every vertex is short of color balance; [color-1][vertex].
struct DeficitTable {
  std::vector<std::vector<int>> out_deficit, in_deficit;

  bool all_zero() const;
};

// Two-color deficits: a vertex needs one more outgoing arc of color i per
// uncompensated incoming arc of the other color, and symmetrically.
DeficitTable compute_deficits(const ColoredMultiDigraph& g);

struct Slot {
  int vertex = -1;
  int color = 0;
};

// Bipartite assignment problem between outgoing slots (rows) and incoming
// slots (cols). Cost depends only on the slot classes; each class pair caches
// the minimum-weight trail realizing its cost.
struct MatchingInstance {
  std::vector<Slot> rows, cols;
  std::vector<std::vector<Rational>> cost;
  std::map<std::array<int, 4>, Trail> trails;  // (u, i, v, j) -> trail

  const Trail& trail_for(const Slot& row, const Slot& col) const;
};

// Builds the slot matching instance for a trail-connected 2-colored graph.
// One trail search per distinct row class; `threads` > 1 distributes the
// searches (results are independent of the thread count).
MatchingInstance build_matching_instance(const ColoredMultiDigraph& g, const ArcGraph& ag,
                                         const DeficitTable& deficits, int threads = 1);

// G plus one new copy of every arc on the matched slot pairs' cached trails.
// Copies remember the arc they duplicate. Output is color-balanced whenever
// the matching is perfect on a correctly built instance.
ColoredMultiDigraph augment(const ColoredMultiDigraph& g, const MatchingInstance& instance,
                            const std::vector<int>& row_to_col);

struct FeasibilityReport {
  bool feasible = false;
  ConnectivityReport connectivity;
  // Absent when the graph is too small for the quick necessary checks.
  std::optional<StrongLocalReport> prefilter;
};

// Whether some properly colored closed walk covers every arc (any color
// count). Equivalent to trail-connectivity except on single-arc graphs,
// which are trail-connected yet cannot close a walk.
FeasibilityReport check_feasible(const ColoredMultiDigraph& g);

struct Solution {
  ClosedWalk walk;  // over original arc ids; repeats allowed
  Rational total_weight;
  std::map<int, int> duplicated;  // original arc id -> extra copies added
};

// Minimum-weight properly colored closed walk covering every arc of a
// 2-colored graph: balance the graph by duplicating minimum-weight trails
// chosen by an assignment between deficit slots, then read off a properly
// colored Euler trail of the balanced graph. Absent iff infeasible.
std::optional<Solution> solve(const ColoredMultiDigraph& g, int threads = 1);

}  // namespace pcp
