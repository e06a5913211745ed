#pragma once

#include <string>

#include "pcp/graph.hpp"
#include "pcp/solver.hpp"
#include "pcp/trail.hpp"

namespace pcp {

// Line-oriented instance format:
//   # comment
//   p cpcd <n> <c>
//   a <tail> <head> <color> <weight>     (1-based vertices/arc ids; weight
//                                         a non-negative decimal or p/q)
// Arc ids follow 'a'-line order. Errors carry the offending line number.
ColoredMultiDigraph parse_instance(const std::string& text);
std::string emit_instance(const ColoredMultiDigraph& g);

// Walk format: "w <totalWeight> <k>" followed by k whitespace-separated
// 1-based arc ids. parse_walk validates ids against the instance; the stated
// weight is kept as-is (verification checks it against the arcs).
ClosedWalk parse_walk(const std::string& text, const ColoredMultiDigraph& g);
std::string emit_walk(const ClosedWalk& walk);

// Walk block prefixed with "s weight <w>" and "s duplicated <id>x<count>..."
// summary lines (1-based arc ids, ascending).
std::string emit_solution(const Solution& s);

}  // namespace pcp
