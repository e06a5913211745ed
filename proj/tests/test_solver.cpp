#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "pcp/arc_graph.hpp"
#include "pcp/errors.hpp"
#include "pcp/euler.hpp"
#include "pcp/generator.hpp"
#include "pcp/matching.hpp"
#include "pcp/oracle.hpp"
#include "pcp/solver.hpp"
#include "test_support.hpp"

using pcp::ArcGraph;
using pcp::ColoredMultiDigraph;
using pcp::InputError;
using pcp::Rational;

namespace {

Rational brute_force_assignment(const std::vector<std::vector<Rational>>& cost,
                                std::vector<int>* best_perm = nullptr) {
  int n = static_cast<int>(cost.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // next_permutation enumerates in lexicographic order, so the first optimum
  // found is the lexicographically smallest one.
  Rational best(-1);
  do {
    Rational total(0);
    for (int r = 0; r < n; ++r) total += cost[r][perm[r]];
    if (best < 0 || total < best) {
      best = total;
      if (best_perm) *best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("deficit tables") {
  pcp::DeficitTable cyc = pcp::compute_deficits(ts::cyc2());
  CHECK(cyc.all_zero());

  pcp::DeficitTable hub = pcp::compute_deficits(ts::hub5());
  CHECK_FALSE(hub.all_zero());
  CHECK(hub.out_deficit[1][1] == 1);  // x1 must start a color-2 trail
  CHECK(hub.in_deficit[1][0] == 1);   // the hub must absorb a color-2 ending
  int out_sum = 0, in_sum = 0;
  for (const auto& row : hub.out_deficit) for (int v : row) out_sum += v;
  for (const auto& row : hub.in_deficit) for (int v : row) in_sum += v;
  CHECK(out_sum == 1);
  CHECK(in_sum == 1);

  CHECK(pcp::compute_deficits(ts::fail4()).all_zero());
  CHECK_THROWS_AS(pcp::compute_deficits(ts::fig1()), InputError);
}

TEST_CASE("matching instance construction") {
  ColoredMultiDigraph g = ts::hub5();
  ArcGraph ag(g);
  pcp::MatchingInstance inst = pcp::build_matching_instance(g, ag, pcp::compute_deficits(g));
  REQUIRE(inst.rows.size() == 1);
  REQUIRE(inst.cols.size() == 1);
  CHECK(inst.rows[0].vertex == 1);
  CHECK(inst.rows[0].color == 2);
  CHECK(inst.cols[0].vertex == 0);
  CHECK(inst.cols[0].color == 2);
  CHECK(inst.cost[0][0] == Rational(1));
  CHECK(inst.trail_for(inst.rows[0], inst.cols[0]).arc_ids == std::vector<int>{1});

  // Multithreaded construction matches the serial one.
  pcp::MatchingInstance par = pcp::build_matching_instance(g, ag, pcp::compute_deficits(g), 4);
  CHECK(par.cost == inst.cost);
}

TEST_CASE("assignment solver finds minimum perfect matchings") {
  using Row = std::vector<Rational>;
  pcp::Assignment one = pcp::hungarian_min_perfect_matching({Row{Rational(3)}});
  CHECK(one.total_cost == Rational(3));
  CHECK(one.row_to_col == std::vector<int>{0});

  pcp::Assignment diag =
      pcp::hungarian_min_perfect_matching({Row{Rational(1), Rational(2)},
                                           Row{Rational(2), Rational(1)}});
  CHECK(diag.total_cost == Rational(2));
  CHECK(diag.row_to_col == std::vector<int>{0, 1});

  // All-equal costs: ties resolve to the lexicographically smallest assignment.
  pcp::Assignment flat =
      pcp::hungarian_min_perfect_matching({Row{Rational(1), Rational(1)},
                                           Row{Rational(1), Rational(1)}});
  CHECK(flat.total_cost == Rational(2));
  CHECK(flat.row_to_col == std::vector<int>{0, 1});

  pcp::Assignment anti =
      pcp::hungarian_min_perfect_matching({Row{Rational(5), Rational(1)},
                                           Row{Rational(1), Rational(5)}});
  CHECK(anti.total_cost == Rational(2));
  CHECK(anti.row_to_col == std::vector<int>{1, 0});

  CHECK(pcp::hungarian_min_perfect_matching({}).total_cost == Rational(0));
  CHECK_THROWS_AS(pcp::hungarian_min_perfect_matching({Row{Rational(1), Rational(2)}}),
                  InputError);
  CHECK_THROWS_AS(pcp::hungarian_min_perfect_matching({Row{Rational(-1)}}), InputError);
}

TEST_CASE("assignment solver agrees with brute force, including tie order") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> size(1, 5), value(0, 6), den(1, 4);
  for (int round = 0; round < 120; ++round) {
    int n = size(rng);
    std::vector<std::vector<Rational>> cost(n, std::vector<Rational>(n));
    for (auto& row : cost) {
      for (auto& cell : row) cell = Rational(value(rng), round % 3 == 0 ? den(rng) : 1);
    }
    std::vector<int> lex_best;
    Rational best = brute_force_assignment(cost, &lex_best);
    pcp::Assignment got = pcp::hungarian_min_perfect_matching(cost);
    CAPTURE(round);
    CHECK(got.total_cost == best);
    CHECK(got.row_to_col == lex_best);
  }
}

TEST_CASE("augmenting restores balance") {
  ColoredMultiDigraph g = ts::hub5();
  ArcGraph ag(g);
  pcp::MatchingInstance inst = pcp::build_matching_instance(g, ag, pcp::compute_deficits(g));
  ColoredMultiDigraph aug = pcp::augment(g, inst, {0});
  CHECK(aug.arc_count() == 6);
  CHECK(aug.arc(5).origin == 1);
  CHECK(pcp::is_color_balanced(aug).balanced);
  CHECK(pcp::pc_euler_trail(aug).has_value());
}

TEST_CASE("feasibility verdicts") {
  pcp::FeasibilityReport cyc = pcp::check_feasible(ts::cyc2());
  CHECK(cyc.feasible);
  CHECK(cyc.connectivity.connected);

  // Unbalanced graphs can still be feasible.
  CHECK(pcp::check_feasible(ts::hub5()).feasible);

  pcp::FeasibilityReport four = pcp::check_feasible(ts::fail4());
  CHECK_FALSE(four.feasible);
  CHECK(four.connectivity.witness_from == 0);
  CHECK(four.connectivity.witness_to == 2);
  REQUIRE(four.prefilter.has_value());
  CHECK(four.prefilter->ok());  // the prefilter alone cannot see this failure

  pcp::FeasibilityReport same = pcp::check_feasible(ts::same2());
  CHECK_FALSE(same.feasible);
  REQUIRE(same.prefilter.has_value());
  CHECK_FALSE(same.prefilter->colors_ok);

  // A single arc is trail-connected yet cannot close a properly colored walk.
  pcp::FeasibilityReport lone = pcp::check_feasible(ts::make_graph(2, 2, {{0, 1, 1, 1}}));
  CHECK_FALSE(lone.feasible);
  CHECK(lone.connectivity.connected);

  CHECK_THROWS_AS(pcp::check_feasible(ts::make_graph(2, 1, {})), InputError);
}

TEST_CASE("solver on the fixture instances") {
  auto cyc = pcp::solve(ts::cyc2());
  REQUIRE(cyc.has_value());
  CHECK(cyc->total_weight == Rational(3));
  CHECK(cyc->walk.arc_ids == std::vector<int>{0, 1});
  CHECK(cyc->duplicated.empty());

  auto hub = pcp::solve(ts::hub5());
  REQUIRE(hub.has_value());
  CHECK(hub->total_weight == Rational(6));
  CHECK(hub->duplicated == std::map<int, int>{{1, 1}});
  CHECK(pcp::verify_closed_pc_walk(ts::hub5(), hub->walk, true, false).ok);
  CHECK(hub->walk.total_weight == Rational(6));

  CHECK_FALSE(pcp::solve(ts::fail4()).has_value());
  CHECK_FALSE(pcp::solve(ts::same2()).has_value());
  CHECK_FALSE(pcp::solve(ts::make_graph(2, 2, {{0, 1, 1, 1}})).has_value());
  CHECK_THROWS_AS(pcp::solve(ts::fig1()), InputError);
  CHECK_THROWS_AS(pcp::solve(ts::make_graph(2, 1, {})), InputError);
}

TEST_CASE("solver weight matches the exhaustive reference on seeded instances") {
  int solved = 0;
  for (int seed = 0; seed < 60; ++seed) {
    pcp::GeneratorConfig cfg;
    cfg.mode = pcp::GenMode::feasible;
    cfg.vertex_count = 2 + seed % 5;
    cfg.arc_target = 6 + seed % 5;
    cfg.duplicates = seed % 3;
    cfg.weight_max = 9;
    cfg.seed = 31000 + static_cast<std::uint64_t>(seed);
    ColoredMultiDigraph g = pcp::generate(cfg);
    if (g.arc_count() > pcp::oracle::kMinCoverWalkArcLimit) continue;
    auto fast = pcp::solve(g);
    auto slow = pcp::oracle::min_cover_walk(g);
    CAPTURE(seed);
    REQUIRE(fast.has_value());
    REQUIRE(slow.has_value());
    CHECK(fast->total_weight == slow->weight);
    CHECK(pcp::verify_closed_pc_walk(g, fast->walk, true, false).ok);
    ++solved;
  }
  CHECK(solved >= 30);
}

TEST_CASE("solutions scale with the weights") {
  ColoredMultiDigraph g = ts::hub5();
  std::vector<pcp::ArcSpec> scaled;
  for (const pcp::Arc& a : g.arcs()) {
    scaled.push_back({a.tail, a.head, a.color, a.weight * Rational(7, 3)});
  }
  ColoredMultiDigraph h = ColoredMultiDigraph::build(2, 3, scaled);
  auto base = pcp::solve(g);
  auto big = pcp::solve(h);
  REQUIRE(base.has_value());
  REQUIRE(big.has_value());
  CHECK(big->total_weight == base->total_weight * Rational(7, 3));
  CHECK(big->duplicated == base->duplicated);
}

TEST_CASE("thread count does not change the answer") {
  for (int seed = 0; seed < 8; ++seed) {
    pcp::GeneratorConfig cfg;
    cfg.mode = pcp::GenMode::feasible;
    cfg.vertex_count = 4;
    cfg.arc_target = 14;
    cfg.duplicates = 2;
    cfg.weight_max = 5;
    cfg.seed = 5200 + static_cast<std::uint64_t>(seed);
    ColoredMultiDigraph g = pcp::generate(cfg);
    auto serial = pcp::solve(g, 1);
    auto parallel = pcp::solve(g, 4);
    REQUIRE(serial.has_value());
    REQUIRE(parallel.has_value());
    CHECK(serial->total_weight == parallel->total_weight);
    CHECK(serial->walk.arc_ids == parallel->walk.arc_ids);
    CHECK(serial->duplicated == parallel->duplicated);
  }
}
