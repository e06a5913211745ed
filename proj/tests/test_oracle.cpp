#include <vector>

#include "doctest.h"
#include "pcp/errors.hpp"
#include "pcp/euler.hpp"
#include "pcp/oracle.hpp"
#include "test_support.hpp"

using pcp::ColoredMultiDigraph;
using pcp::InputError;
using pcp::Rational;
namespace oracle = pcp::oracle;

namespace {

ColoredMultiDigraph path_blob(int arcs) {
  // A deliberately oversized graph to trip the size guards.
  std::vector<ts::ArcTuple> specs;
  for (int k = 0; k < arcs; ++k) specs.push_back({k % 2, 1 - k % 2, 1 + k % 2, 1});
  return ts::make_graph(2, 2, specs);
}

}  // namespace

TEST_CASE("reference minimum cover walks") {
  auto cyc = oracle::min_cover_walk(ts::cyc2());
  REQUIRE(cyc.has_value());
  CHECK(cyc->weight == Rational(3));
  CHECK(cyc->arc_ids == std::vector<int>{0, 1});

  auto hub = oracle::min_cover_walk(ts::hub5());
  REQUIRE(hub.has_value());
  CHECK(hub->weight == Rational(6));
  CHECK(hub->arc_ids == std::vector<int>{0, 1, 2, 3, 4, 1});
  CHECK(pcp::verify_closed_pc_walk(ts::hub5(), {hub->arc_ids, hub->weight}, true, false).ok);

  CHECK_FALSE(oracle::min_cover_walk(ts::same2()).has_value());
  CHECK_FALSE(oracle::min_cover_walk(ts::fail4()).has_value());

  // The rosette is coverable but only by repeating arcs.
  auto fig = oracle::min_cover_walk(ts::fig1());
  REQUIRE(fig.has_value());
  CHECK(fig->weight > ts::fig1().total_weight());
  CHECK(pcp::verify_closed_pc_walk(ts::fig1(), {fig->arc_ids, fig->weight}, true, false).ok);

  CHECK_THROWS_AS(oracle::min_cover_walk(path_blob(oracle::kMinCoverWalkArcLimit + 1)),
                  InputError);
  CHECK_THROWS_AS(oracle::min_cover_walk(ts::make_graph(2, 1, {})), InputError);
}

TEST_CASE("reference Euler trails") {
  auto cyc = oracle::euler_trail(ts::cyc2());
  REQUIRE(cyc.has_value());
  CHECK(*cyc == std::vector<int>{0, 1});

  auto hub6 = oracle::euler_trail(ts::hub5().with_added_copies({1}));
  REQUIRE(hub6.has_value());
  CHECK(*hub6 == std::vector<int>{0, 1, 2, 3, 4, 5});

  CHECK_FALSE(oracle::euler_trail(ts::fail4()).has_value());
  CHECK_FALSE(oracle::euler_trail(ts::same2()).has_value());
  CHECK_FALSE(oracle::euler_trail(ts::hub5()).has_value());
  CHECK_FALSE(oracle::euler_trail(ts::fig1()).has_value());
  CHECK_FALSE(oracle::euler_trail(ts::make_graph(2, 1, {})).has_value());

  CHECK_THROWS_AS(oracle::euler_trail(path_blob(oracle::kTrailSearchArcLimit + 1)), InputError);
}

TEST_CASE("reference vertex-to-vertex trails") {
  auto t = oracle::min_fev_trail(ts::hub5(), 1, 0, pcp::ColorSet::of({2}), pcp::ColorSet::of({2}));
  REQUIRE(t.has_value());
  CHECK(t->weight == Rational(1));
  CHECK(t->arc_ids == std::vector<int>{1});

  auto loop = oracle::min_fev_trail(ts::cyc2(), 0, 0);
  REQUIRE(loop.has_value());
  CHECK(loop->arc_ids == std::vector<int>{0, 1});

  CHECK_FALSE(oracle::min_fev_trail(ts::same2(), 0, 1, pcp::ColorSet::of({2})).has_value());
  CHECK_THROWS_AS(oracle::min_fev_trail(path_blob(oracle::kTrailSearchArcLimit + 1), 0, 1),
                  InputError);
}

TEST_CASE("reference trail-connectivity") {
  CHECK(oracle::trail_connected(ts::cyc2()));
  CHECK(oracle::trail_connected(ts::hub5()));
  CHECK(oracle::trail_connected(ts::fig1()));
  CHECK_FALSE(oracle::trail_connected(ts::fail4()));
  CHECK_FALSE(oracle::trail_connected(ts::same2()));
  CHECK_THROWS_AS(oracle::trail_connected(path_blob(oracle::kTrailSearchArcLimit + 1)),
                  InputError);
}

TEST_CASE("cover walks never beat, and sometimes beat the weight of, Euler trails") {
  // Where an Euler trail exists the minimum cover equals the total weight.
  ColoredMultiDigraph balanced = ts::hub5().with_added_copies({1});
  auto cover = oracle::min_cover_walk(balanced);
  REQUIRE(cover.has_value());
  CHECK(cover->weight == balanced.total_weight());
}
