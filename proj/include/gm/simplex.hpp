#pragma once

#include <vector>

#include "gm/rational.hpp"

namespace gm {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;  // primal solution when optimal
  Rational objective;       // c·x when optimal
};

// Minimizes c·x subject to A·x = b, x >= 0, over exact rationals.
// Dense two-phase tableau simplex with Bland's rule on both the entering and
// the leaving choice, so it terminates on degenerate problems. Sized for the
// small systems this project produces (tens of rows/columns).
LpResult simplex_solve(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b,
                       const std::vector<Rational>& c);

}  // namespace gm
