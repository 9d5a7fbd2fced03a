#ifndef SPINEKIT_SRC_SIMPLEX_HPP
#define SPINEKIT_SRC_SIMPLEX_HPP

// Internal exact LP core: maximize c.v subject to A v = b, v >= 0, over
// arbitrary-precision rationals. Full-tableau two-phase simplex with Bland's
// anti-cycling rule; deterministic. Problem sizes here are tiny, so clarity
// beats revised-simplex cleverness.

#include <spinekit/rational.hpp>

#include <vector>

namespace spinekit::lp {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpProblem {
  std::vector<std::vector<Rat>> a;  // m rows, n cols
  std::vector<Rat> b;               // m
  std::vector<Rat> c;               // n
};

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rat objective = 0;
  std::vector<Rat> v;  // n, only meaningful when optimal
};

LpSolution solve_lp(const LpProblem& problem);

}  // namespace spinekit::lp

#endif
