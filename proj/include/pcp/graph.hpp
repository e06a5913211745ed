#pragma once

#include <vector>

#include "pcp/rational.hpp"

namespace pcp {

// One requested arc; endpoints and colors are 0-based / 1-based as below.
struct ArcSpec {
  int tail = 0;   // 0-based vertex
  int head = 0;   // 0-based vertex
  int color = 0;  // 1-based, in [1, colorCount]
  Rational weight;
};

struct Arc {
  int tail = 0;
  int head = 0;
  int color = 0;
  Rational weight;
  // Id of the arc this one duplicates in the instance it was derived from;
  // equals the arc's own id in graphs built directly from specs.
  int origin = 0;
};

// Arc-colored weighted multidigraph. Arcs are identified by dense 0-based ids
// in construction order; parallel arcs are allowed, self-loops are not.
class ColoredMultiDigraph {
 public:
  static ColoredMultiDigraph build(int color_count, int vertex_count,
                                   const std::vector<ArcSpec>& specs);

  int color_count() const { return colors_; }
  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int id) const { return arcs_[id]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  const std::vector<int>& out_arcs(int v) const { return out_[v]; }
  const std::vector<int>& in_arcs(int v) const { return in_[v]; }
  const std::vector<int>& out_arcs(int v, int color) const { return out_by_color_[v][color - 1]; }
  const std::vector<int>& in_arcs(int v, int color) const { return in_by_color_[v][color - 1]; }

  Rational total_weight() const;

  // Number of arcs sharing this arc's (tail, head, color).
  int multiplicity(int arc_id) const;

  // Copy of this graph with one extra parallel copy per listed arc id
  // (repeats allowed); copies inherit the source arc's origin.
  ColoredMultiDigraph with_added_copies(const std::vector<int>& arc_ids) const;

  // Cross-checks the incidence indexes against the arc list; throws
  // InvariantViolation on any mismatch.
  void audit() const;

 private:
  int colors_ = 0;
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<std::vector<std::vector<int>>> out_by_color_, in_by_color_;
};

// Per-vertex, per-color in/out arc counts plus colorless totals.
struct DegreeProfile {
  // [color-1][vertex]
  std::vector<std::vector<int>> in_deg, out_deg;
  std::vector<int> in_total, out_total;
};

DegreeProfile degree_profile(const ColoredMultiDigraph& g);

struct BalanceReport {
  bool balanced = false;
  // First violating (vertex, color) in vertex-major scan order; -1/-1 when balanced.
  int vertex = -1;
  int color = -1;
};

// Color balance. For two colors: every vertex sends in color i exactly as many
// arcs as it receives in the other color. For general color counts: in/out
// totals match and no single color majorizes the opposite side.
BalanceReport is_color_balanced(const ColoredMultiDigraph& g);

// For each parallel class of arcs (same tail, head, color), keeps the
// lowest-id copy and replaces each later copy x->y of color p and weight w by
// a fresh 3-arc path x->u (p, 0), u->u' (other color, w), u'->y (p, 0).
// Two-color graphs only. The result has no parallel arcs and the same minimum
// cover-walk weight.
ColoredMultiDigraph double_subdivide(const ColoredMultiDigraph& g);

// Quick necessary conditions for trail-connectivity (not sufficient):
// (a) the underlying digraph is strongly connected once isolated vertices are
//     ignored, and
// (b) any vertex receiving color i also sends some color != i, and vice versa.
struct StrongLocalReport {
  bool strongly_connected = false;
  int unreachable_from = -1;  // witness pair when not strongly connected
  int unreachable_to = -1;
  bool colors_ok = false;
  int vertex = -1;  // witness when a color condition fails
  int color = -1;
  bool missing_out = false;  // true: in-color with no differing out; false: the converse

  bool ok() const { return strongly_connected && colors_ok; }
};

StrongLocalReport strong_and_local_check(const ColoredMultiDigraph& g);

}  // namespace pcp
