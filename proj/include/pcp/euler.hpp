#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcp/arc_graph.hpp"
#include "pcp/graph.hpp"
#include "pcp/trail.hpp"

namespace pcp {

// Closed properly colored trail (wrap-around included) in which no vertex has
// two outgoing arcs of the same color.
struct Circuit {
  std::vector<int> arc_ids;
};

// Throws InvariantViolation unless the arcs form a valid circuit of g.
void validate_circuit(const ColoredMultiDigraph& g, const Circuit& c);

// Cyclic rotation so that arc_ids[start_pos] comes first.
Circuit rotate_circuit(const Circuit& c, int start_pos);

// Undirected adjacency between circuits i < j that share a vertex y whose
// out-degree in color k is 1 in both (a "good" vertex: the union sees two
// k-colored out-arcs at y, allowing a color-safe splice).
struct CircuitLink {
  int a = -1;
  int b = -1;
  int vertex = -1;
  int color = 0;
};

struct CircuitDecomposition {
  std::vector<Circuit> circuits;
  std::vector<int> circuit_of;  // arc id -> circuit index
  std::vector<CircuitLink> links;
};

// Partitions the arcs of a color-balanced 2-colored graph into circuits by
// growing a properly colored trail (lowest admissible arc id first) and
// cutting a closed suffix whenever the newly entered vertex already carries
// an on-trail out-arc of the opposite color.
CircuitDecomposition decompose_into_circuits(const ColoredMultiDigraph& g);

// Fills `links`: one edge per circuit pair with a good shared vertex, labeled
// with the lowest such vertex id and, for it, the lowest shared out-color.
CircuitDecomposition build_circuit_graph(const ColoredMultiDigraph& g, CircuitDecomposition deco);

// Properly colored closed Euler trail of a 2-colored multigraph, or absent
// when the graph is not color-balanced or not PC trail-connected. Existing
// circuits are stitched along a DFS tree of the circuit adjacency: a circuit
// is spliced in right after an arc entering its good vertex with the
// complementary color, rotated to leave that vertex with the shared color.
std::optional<ClosedWalk> pc_euler_trail(const ColoredMultiDigraph& g);

// If some connected component D of G - C (underlying graph) makes C bad —
// every vertex shared by C and D has at most one out-arc per color in the
// union — returns D's arc ids. Diagnostic for infeasibility explanations.
std::optional<std::vector<int>> is_bad_circuit(const ColoredMultiDigraph& g, const Circuit& c);

struct WalkCheck {
  bool ok = true;
  std::string violation;
};

// Validates a closed walk against g: known arc ids, proper coloring of all
// consecutive pairs including the wrap-around, incidence chaining, closure,
// no arc repeats when require_trail, full arc coverage when require_cover_all,
// and stated-vs-actual weight agreement. Reports the first violation found in
// that order; positions are 0-based, arc ids in messages are 1-based.
WalkCheck verify_closed_pc_walk(const ColoredMultiDigraph& g, const ClosedWalk& walk,
                                bool require_cover_all, bool require_trail);

}  // namespace pcp
