#pragma once

#include <cstdint>

#include "pcp/graph.hpp"

namespace pcp {

enum class GenMode { uniform, feasible, figure_family };

struct GeneratorConfig {
  GenMode mode = GenMode::uniform;
  int vertex_count = 2;
  int arc_target = 0;       // approximate for feasible mode (petals round up)
  int color_count = 2;
  long long weight_min = 1;
  long long weight_max = 1;
  std::uint64_t seed = 0;
  int petals = 0;           // feasible / figure-family; 0 derives a default
  int duplicates = 0;       // feasible: arcs copied to create deficits
};

// Seeded instance generation; identical config => byte-identical instance.
//   uniform:       arc_target arbitrary arcs, no feasibility guarantee.
//   feasible:      2-colored closed trails through a hub vertex, alternating
//                  colors (out of the hub: color 1, into it: color 2), plus
//                  `duplicates` parallel copies; feasible by construction.
//   figure_family: 3-colored petal graphs cycling three fixed color patterns;
//                  3 petals with unit weights reproduce the fixture FIG1.
ColoredMultiDigraph generate(const GeneratorConfig& cfg);

}  // namespace pcp
