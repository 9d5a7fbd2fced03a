#include "simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace spinekit::lp {

namespace {

// Tableau: rows 0..m-1 are constraints over `width` variable columns plus a
// trailing rhs column; `cost` is the reduced-cost row with the negated
// objective value in its rhs slot.
struct Tableau {
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> cost;
  std::vector<std::size_t> basis;  // basic variable per row
  std::size_t width = 0;

  Rat& rhs(std::size_t i) { return rows[i][width]; }
};

void pivot(Tableau& t, std::size_t row, std::size_t col) {
  Rat p = t.rows[row][col];
  for (Rat& v : t.rows[row]) v /= p;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i == row) continue;
    Rat factor = t.rows[i][col];
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= t.width; ++j) t.rows[i][j] -= factor * t.rows[row][j];
  }
  Rat factor = t.cost[col];
  if (factor != 0) {
    for (std::size_t j = 0; j <= t.width; ++j) t.cost[j] -= factor * t.rows[row][j];
  }
  t.basis[row] = col;
}

enum class Step { pivoted, optimal, unbounded };

// Bland's rule: entering column = lowest index with positive reduced cost;
// leaving row = lexicographically smallest basic variable among the minimum
// ratios.
Step bland_step(Tableau& t, std::size_t usable_cols) {
  std::size_t entering = usable_cols;
  for (std::size_t j = 0; j < usable_cols; ++j) {
    if (t.cost[j] > 0) {
      entering = j;
      break;
    }
  }
  if (entering == usable_cols) return Step::optimal;

  std::size_t leaving = t.rows.size();
  Rat best_ratio = 0;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.rows[i][entering] <= 0) continue;
    Rat ratio = t.rhs(i) / t.rows[i][entering];
    if (leaving == t.rows.size() || ratio < best_ratio ||
        (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
      leaving = i;
      best_ratio = ratio;
    }
  }
  if (leaving == t.rows.size()) return Step::unbounded;
  pivot(t, leaving, entering);
  return Step::pivoted;
}

void install_cost(Tableau& t, const std::vector<Rat>& c) {
  t.cost.assign(t.width + 1, Rat(0));
  for (std::size_t j = 0; j < c.size(); ++j) t.cost[j] = c[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    Rat cb = t.basis[i] < c.size() ? c[t.basis[i]] : Rat(0);
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= t.width; ++j) t.cost[j] -= cb * t.rows[i][j];
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  std::size_t m = problem.a.size();
  std::size_t n = problem.c.size();
  if (problem.b.size() != m) throw std::invalid_argument("lp: |b| != row count");
  for (const auto& row : problem.a) {
    if (row.size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
  }

  Tableau t;
  t.width = n + m;  // original columns then one artificial per row
  t.basis.resize(m);
  t.rows.assign(m, std::vector<Rat>(t.width + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = problem.b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) {
      t.rows[i][j] = flip ? Rat(-problem.a[i][j]) : problem.a[i][j];
    }
    t.rows[i][n + i] = 1;
    t.rhs(i) = flip ? Rat(-problem.b[i]) : problem.b[i];
    t.basis[i] = n + i;
  }

  // Phase 1: maximize minus the sum of artificials. Bounded above by zero,
  // so the loop can only stop at an optimum.
  std::vector<Rat> phase1(t.width, Rat(0));
  for (std::size_t k = 0; k < m; ++k) phase1[n + k] = -1;
  install_cost(t, phase1);
  while (bland_step(t, t.width) == Step::pivoted) {
  }
  Rat phase1_value = -t.cost[t.width];
  if (phase1_value != 0) return {LpStatus::infeasible, 0, {}};

  // Drive leftover artificials out of the basis; a row with no original
  // coefficients left is redundant and gets dropped.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col == n) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      pivot(t, i, col);
      ++i;
    }
  }

  // Phase 2 over the original columns only.
  install_cost(t, problem.c);
  Step step;
  while ((step = bland_step(t, n)) == Step::pivoted) {
  }
  if (step == Step::unbounded) return {LpStatus::unbounded, 0, {}};

  LpSolution solution;
  solution.status = LpStatus::optimal;
  solution.v.assign(n, Rat(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) solution.v[t.basis[i]] = t.rhs(i);
  }
  solution.objective = -t.cost[t.width];
  return solution;
}

}  // namespace spinekit::lp
