#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "pcp/graph.hpp"
#include "pcp/rational.hpp"

namespace pcp {

// Subset of colors; empty means "all colors allowed".
struct ColorSet {
  std::vector<std::uint64_t> words;

  static ColorSet all() { return {}; }
  static ColorSet of(std::initializer_list<int> colors);
  static ColorSet of(const std::vector<int>& colors);

  bool unrestricted() const { return words.empty(); }
  bool allows(int color) const {
    if (words.empty()) return true;
    std::size_t idx = static_cast<std::size_t>(color - 1) / 64;
    if (idx >= words.size()) return false;
    return (words[idx] >> ((color - 1) % 64)) & 1;
  }
};

// Open or closed trail: consecutive arcs incident and differently colored,
// no arc repeated. No wrap-around color condition even when closed.
struct Trail {
  std::vector<int> arc_ids;
  Rational total_weight;
  int start_vertex = -1;
  int end_vertex = -1;
  int start_color = 0;
  int end_color = 0;

  // Validates the trail conditions against g; throws InvariantViolation.
  static Trail from_arcs(const ColoredMultiDigraph& g, std::vector<int> ids);
};

// Closed walk candidate; arc repeats allowed. Validation (closure, proper
// coloring including wrap-around, coverage) is verify_closed_pc_walk's job.
struct ClosedWalk {
  std::vector<int> arc_ids;
  Rational total_weight;
};

}  // namespace pcp
