#pragma once

#include <vector>

#include "pcp/rational.hpp"

namespace pcp {

struct Assignment {
  std::vector<int> row_to_col;
  Rational total_cost;
};

// Minimum-cost perfect matching on a square nonnegative cost matrix, exact
// rational arithmetic throughout. Among all optimal assignments, returns the
// lexicographically smallest row->col vector: the primal-dual solve certifies
// an optimal dual, and the answer is then re-selected greedily row by row
// inside the dual's tight-edge graph (which contains every optimum and
// nothing else).
Assignment hungarian_min_perfect_matching(const std::vector<std::vector<Rational>>& cost);

}  // namespace pcp
