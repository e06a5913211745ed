#pragma once

#include <optional>
#include <vector>

#include "pcp/graph.hpp"
#include "pcp/trail.hpp"

namespace pcp {
namespace oracle {

// Hard size bounds; larger instances are refused with an input error rather
// than answered slowly or wrongly.
inline constexpr int kMinCoverWalkArcLimit = 14;
inline constexpr int kTrailSearchArcLimit = 12;

struct WalkResult {
  Rational weight;
  std::vector<int> arc_ids;
};

// Exhaustive minimum-weight properly colored closed walk covering every arc
// (repeats allowed). Least-cost-first search over (vertex, last color,
// covered-set) states; deterministic ties: fewer arcs, then first-discovered.
// Absent when no covering walk exists.
std::optional<WalkResult> min_cover_walk(const ColoredMultiDigraph& g);

// Exhaustive properly colored closed Euler trail (each arc exactly once,
// wrap-around color condition included). Deterministic: lexicographically
// smallest arc sequence among those starting with arc 0.
std::optional<std::vector<int>> euler_trail(const ColoredMultiDigraph& g);

// Exhaustive minimum-weight properly colored s-t trail under start/end color
// restrictions; ties: fewer arcs, then lexicographically smallest sequence.
std::optional<WalkResult> min_fev_trail(const ColoredMultiDigraph& g, int s, int t,
                                        ColorSet start_colors = ColorSet::all(),
                                        ColorSet end_colors = ColorSet::all());

// Whether every ordered arc pair (f1, f2) admits a properly colored trail
// starting with f1 and ending with f2, by memoized trail enumeration.
bool trail_connected(const ColoredMultiDigraph& g);

}  // namespace oracle
}  // namespace pcp
