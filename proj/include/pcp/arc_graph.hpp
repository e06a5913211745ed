#pragma once

#include <optional>
#include <vector>

#include "pcp/graph.hpp"
#include "pcp/trail.hpp"

namespace pcp {

// Node per arc of the underlying graph; an edge f -> g whenever g leaves f's
// head with a different color. Node-simple paths correspond exactly to
// properly colored trails, carrying the arcs' weights on the nodes.
// The referenced graph must outlive the ArcGraph.
class ArcGraph {
 public:
  explicit ArcGraph(const ColoredMultiDigraph& g);

  int node_count() const { return static_cast<int>(succ_.size()); }
  const std::vector<int>& successors(int arc_id) const { return succ_[arc_id]; }
  const ColoredMultiDigraph& graph() const { return *g_; }

 private:
  const ColoredMultiDigraph* g_;
  std::vector<std::vector<int>> succ_;
};

// Single-source search for minimum-weight properly colored trails that may
// reuse vertices but never arcs ("forbidden edge visits"). Deterministic:
// ties fall to fewer arcs, then to the lexicographically smallest arc-id
// sequence. Run once per (source vertex, start-color set); query any number
// of (target, end-color) combinations afterwards.
class FevTrailSearch {
 public:
  FevTrailSearch(const ArcGraph& ag, int source_vertex, ColorSet start_colors);

  std::optional<Trail> trail_to(int target_vertex, ColorSet end_colors) const;

 private:
  std::vector<int> arc_sequence(int node) const;

  const ArcGraph* ag_;
  std::vector<Rational> dist_;
  std::vector<int> steps_;
  std::vector<int> parent_;
  std::vector<char> reached_;
};

// Minimum-weight properly colored trail from s to t honoring the start/end
// color restrictions; absent when no such trail exists. s == t asks for a
// closed trail (no wrap-around color condition).
std::optional<Trail> min_weight_pc_fev_trail(const ArcGraph& ag, int s, int t,
                                             ColorSet start_colors = ColorSet::all(),
                                             ColorSet end_colors = ColorSet::all());

// Whether some properly colored trail starts with arc f1 and ends with arc
// f2; true when f1 == f2.
bool pc_trail_exists(const ArcGraph& ag, int f1, int f2);

struct ConnectivityReport {
  bool connected = false;
  // Lexicographically first ordered arc pair with no connecting trail.
  int witness_from = -1;
  int witness_to = -1;
};

// Whether every ordered pair of arcs is joined by a properly colored trail,
// i.e. whether the arc-adjacency graph is strongly connected.
ConnectivityReport is_pc_trail_connected(const ArcGraph& ag);

}  // namespace pcp
