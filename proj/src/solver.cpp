#include "pcp/solver.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>
#include <utility>

#include "pcp/errors.hpp"
#include "pcp/euler.hpp"
#include "pcp/matching.hpp"

namespace pcp {

bool DeficitTable::all_zero() const {
  for (const auto& per_color : {out_deficit, in_deficit}) {
    for (const auto& row : per_color) {
      for (int x : row) {
        if (x != 0) return false;
      }
    }
  }
  return true;
}

DeficitTable compute_deficits(const ColoredMultiDigraph& g) {
  if (g.color_count() != 2) throw InputError("deficits support exactly 2 colors");
  DegreeProfile p = degree_profile(g);
  DeficitTable t;
  t.out_deficit.assign(2, std::vector<int>(g.vertex_count(), 0));
  t.in_deficit.assign(2, std::vector<int>(g.vertex_count(), 0));
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int i = 1; i <= 2; ++i) {
      t.out_deficit[i - 1][v] = std::max(0, p.in_deg[(3 - i) - 1][v] - p.out_deg[i - 1][v]);
      t.in_deficit[i - 1][v] = std::max(0, p.out_deg[(3 - i) - 1][v] - p.in_deg[i - 1][v]);
    }
  }
  return t;
}

const Trail& MatchingInstance::trail_for(const Slot& row, const Slot& col) const {
  auto it = trails.find({row.vertex, row.color, col.vertex, col.color});
  if (it == trails.end()) throw InvariantViolation("no cached trail for a matched slot pair");
  return it->second;
}

MatchingInstance build_matching_instance(const ColoredMultiDigraph& g, const ArcGraph& ag,
                                         const DeficitTable& deficits, int threads) {
  MatchingInstance inst;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int i = 1; i <= 2; ++i) {
      for (int k = 0; k < deficits.out_deficit[i - 1][v]; ++k) inst.rows.push_back({v, i});
      for (int k = 0; k < deficits.in_deficit[i - 1][v]; ++k) inst.cols.push_back({v, i});
    }
  }
  if (inst.rows.size() != inst.cols.size()) {
    throw InvariantViolation("outgoing and incoming slot counts differ (" +
                             std::to_string(inst.rows.size()) + " vs " +
                             std::to_string(inst.cols.size()) + ")");
  }

  auto classes_of = [](const std::vector<Slot>& slots) {
    std::vector<Slot> classes;
    for (const Slot& s : slots) {
      if (classes.empty() || classes.back().vertex != s.vertex || classes.back().color != s.color) {
        classes.push_back(s);
      }
    }
    return classes;
  };
  const std::vector<Slot> row_classes = classes_of(inst.rows);
  const std::vector<Slot> col_classes = classes_of(inst.cols);

  // One search per row class, fanned out over threads.
  std::vector<std::vector<std::optional<Trail>>> found(
      row_classes.size(), std::vector<std::optional<Trail>>(col_classes.size()));
  auto run_row_class = [&](std::size_t r) {
    FevTrailSearch search(ag, row_classes[r].vertex, ColorSet::of({row_classes[r].color}));
    for (std::size_t c = 0; c < col_classes.size(); ++c) {
      found[r][c] = search.trail_to(col_classes[c].vertex, ColorSet::of({col_classes[c].color}));
    }
  };
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(row_classes.size())));
  if (workers <= 1) {
    for (std::size_t r = 0; r < row_classes.size(); ++r) run_row_class(r);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t r = w; r < row_classes.size(); r += workers) run_row_class(r);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  for (std::size_t r = 0; r < row_classes.size(); ++r) {
    for (std::size_t c = 0; c < col_classes.size(); ++c) {
      if (!found[r][c]) {
        throw InvariantViolation(
            "no properly colored trail between deficit slots (" +
            std::to_string(row_classes[r].vertex) + ", color " +
            std::to_string(row_classes[r].color) + ") -> (" +
            std::to_string(col_classes[c].vertex) + ", color " +
            std::to_string(col_classes[c].color) + ") on a trail-connected graph");
      }
      inst.trails.emplace(
          std::array<int, 4>{row_classes[r].vertex, row_classes[r].color,
                             col_classes[c].vertex, col_classes[c].color},
          *found[r][c]);
    }
  }

  inst.cost.assign(inst.rows.size(), std::vector<Rational>(inst.cols.size(), Rational(0)));
  for (std::size_t x = 0; x < inst.rows.size(); ++x) {
    for (std::size_t y = 0; y < inst.cols.size(); ++y) {
      inst.cost[x][y] = inst.trail_for(inst.rows[x], inst.cols[y]).total_weight;
    }
  }
  return inst;
}

ColoredMultiDigraph augment(const ColoredMultiDigraph& g, const MatchingInstance& instance,
                            const std::vector<int>& row_to_col) {
  if (row_to_col.size() != instance.rows.size()) {
    throw InputError("matching size disagrees with the instance");
  }
  std::vector<int> copies;
  for (std::size_t x = 0; x < row_to_col.size(); ++x) {
    int y = row_to_col[x];
    if (y < 0 || y >= static_cast<int>(instance.cols.size())) {
      throw InputError("matching references an unknown column");
    }
    const Trail& t = instance.trail_for(instance.rows[x], instance.cols[y]);
    copies.insert(copies.end(), t.arc_ids.begin(), t.arc_ids.end());
  }
  return g.with_added_copies(copies);
}

FeasibilityReport check_feasible(const ColoredMultiDigraph& g) {
  if (g.arc_count() < 1) throw InputError("feasibility needs at least 1 arc");
  FeasibilityReport r;
  if (g.arc_count() == 1) {
    // A single arc is trivially trail-connected, but a closed walk would have
    // to leave and re-enter it with differing colors — impossible.
    r.connectivity = {true, -1, -1};
    r.feasible = false;
    return r;
  }
  ArcGraph ag(g);
  r.connectivity = is_pc_trail_connected(ag);
  r.prefilter = strong_and_local_check(g);
  r.feasible = r.connectivity.connected;
  return r;
}

std::optional<Solution> solve(const ColoredMultiDigraph& g, int threads) {
  if (g.color_count() != 2) throw InputError("solve supports exactly 2 colors");
  if (g.arc_count() < 1) throw InputError("solve needs at least 1 arc");
  if (g.arc_count() == 1) return std::nullopt;

  ArcGraph ag(g);
  if (!is_pc_trail_connected(ag).connected) return std::nullopt;

  DeficitTable deficits = compute_deficits(g);
  if (deficits.all_zero()) {
    std::optional<ClosedWalk> walk = pc_euler_trail(g);
    if (!walk) throw InvariantViolation("balanced trail-connected graph without an Euler trail");
    Solution s;
    s.total_weight = walk->total_weight;
    s.walk = std::move(*walk);
    return s;
  }

  MatchingInstance inst = build_matching_instance(g, ag, deficits, threads);
  Assignment asg = hungarian_min_perfect_matching(inst.cost);
  ColoredMultiDigraph augmented = augment(g, inst, asg.row_to_col);
  if (!is_color_balanced(augmented).balanced) {
    throw InvariantViolation("augmented graph is not color-balanced");
  }
  std::optional<ClosedWalk> euler = pc_euler_trail(augmented);
  if (!euler) throw InvariantViolation("augmented graph admits no Euler trail");

  Solution s;
  s.total_weight = g.total_weight() + asg.total_cost;
  if (euler->total_weight != s.total_weight) {
    throw InvariantViolation("constructed walk weight disagrees with the matching bound");
  }
  s.walk.total_weight = s.total_weight;
  s.walk.arc_ids.reserve(euler->arc_ids.size());
  for (int id : euler->arc_ids) {
    s.walk.arc_ids.push_back(augmented.arc(id).origin);
    if (id >= g.arc_count()) ++s.duplicated[augmented.arc(id).origin];
  }
  WalkCheck check = verify_closed_pc_walk(g, s.walk, true, false);
  if (!check.ok) throw InvariantViolation("projected walk invalid: " + check.violation);
  return s;
}

}  // namespace pcp
