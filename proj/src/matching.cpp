#include "pcp/matching.hpp"

#include <algorithm>
#include <string>

#include "pcp/errors.hpp"

namespace pcp {

Assignment hungarian_min_perfect_matching(const std::vector<std::vector<Rational>>& cost) {
  const int n = static_cast<int>(cost.size());
  for (const auto& row : cost) {
    if (static_cast<int>(row.size()) != n) throw InputError("cost matrix must be square");
    for (const Rational& c : row) {
      if (c < 0) throw InputError("cost matrix entries must be nonnegative");
    }
  }
  if (n == 0) return {{}, Rational(0)};

  // Primal-dual row insertion (1-based internally). p[j] is the row matched
  // to column j; column 0 is the staging slot for the row being inserted.
  std::vector<Rational> u(n + 1, Rational(0)), v(n + 1, Rational(0)), minv(n + 1, Rational(0));
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<char> minv_set(n + 1, 0), used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      Rational delta;
      bool delta_set = false;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (!minv_set[j] || cur < minv[j]) {
          minv[j] = cur;
          minv_set[j] = 1;
          way[j] = j0;
        }
        if (!delta_set || minv[j] < delta) {
          delta = minv[j];
          delta_set = true;
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else if (minv_set[j]) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }

  std::vector<int> match(n, -1), owner(n, -1);
  for (int j = 1; j <= n; ++j) {
    match[p[j] - 1] = j - 1;
    owner[j - 1] = p[j] - 1;
  }

  // Certify the dual before using its tight graph: feasible everywhere,
  // tight on the matching.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (u[i + 1] + v[j + 1] > cost[i][j]) {
        throw InvariantViolation("matching dual is infeasible");
      }
    }
    if (u[i + 1] + v[match[i] + 1] != cost[i][match[i]]) {
      throw InvariantViolation("matched edge is not tight");
    }
  }

  std::vector<std::vector<int>> tight(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (u[i + 1] + v[j + 1] == cost[i][j]) tight[i].push_back(j);
    }
  }

  // Lexicographic re-selection: fix rows in order, preferring the smallest
  // tight column that still leaves the remaining rows matchable.
  std::vector<char> fixed_col(n, 0);
  for (int r = 0; r < n; ++r) {
    for (int j : tight[r]) {
      if (fixed_col[j]) continue;
      if (j == match[r]) break;
      const int displaced = owner[j];
      const int freed = match[r];
      match[r] = j;
      owner[j] = r;
      match[displaced] = -1;

      std::vector<char> visited(n, 0);
      visited[j] = 1;
      auto rematch = [&](auto&& self, int row) -> bool {
        for (int jj : tight[row]) {
          if (fixed_col[jj] || visited[jj]) continue;
          visited[jj] = 1;
          if (owner[jj] == -1 || self(self, owner[jj])) {
            owner[jj] = row;
            match[row] = jj;
            return true;
          }
        }
        return false;
      };
      owner[freed] = -1;
      if (rematch(rematch, displaced)) break;
      // revert
      owner[freed] = r;
      match[r] = freed;
      owner[j] = displaced;
      match[displaced] = j;
    }
    fixed_col[match[r]] = 1;
  }

  Assignment result;
  result.row_to_col = match;
  result.total_cost = 0;
  for (int i = 0; i < n; ++i) result.total_cost += cost[i][match[i]];

  Rational dual_total = 0;
  for (int i = 1; i <= n; ++i) dual_total += u[i] + v[i];
  if (dual_total != result.total_cost) {
    throw InvariantViolation("re-selected matching lost optimality");
  }
  return result;
}

}  // namespace pcp
