#include "gm/simplex.hpp"

#include <cstddef>

namespace gm {

namespace {

// Tableau with rows = current basis equations and an objective row kept in
// reduced form. basis[i] is the variable owning row i.
struct Tableau {
  std::size_t rows = 0, cols = 0;  // cols excludes the rhs
  std::vector<std::vector<Rational>> t;  // rows x (cols + 1); last col = rhs
  std::vector<Rational> z;               // reduced costs, size cols
  Rational obj;                          // current objective value
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    if (z[c] != 0) {
      const Rational f = z[c];
      for (std::size_t j = 0; j < cols; ++j) z[j] -= f * t[r][j];
      obj += f * t[r][cols];  // row is already divided: t[r][cols] is the step
    }
    basis[r] = c;
  }

  // Bland: enter the lowest-index improving column (restricted to < limit),
  // leave on the ratio test with lowest basis index as tie-break.
  // Returns false when optimal; throws on unboundedness via the flag.
  bool step(std::size_t limit, bool& unbounded) {
    std::size_t enter = limit;
    for (std::size_t j = 0; j < limit; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == limit) return false;

    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = t[i][cols] / t[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) {
      unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }
};

}  // namespace

LpResult simplex_solve(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b,
                       const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();

  Tableau tb;
  tb.rows = m;
  tb.cols = n + m;  // original variables + one artificial per row
  tb.t.assign(m, std::vector<Rational>(tb.cols + 1, Rational(0)));
  tb.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;  // keep rhs nonnegative for the start basis
    for (std::size_t j = 0; j < n; ++j) {
      tb.t[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    }
    tb.t[i][n + i] = 1;
    tb.t[i][tb.cols] = flip ? Rational(-b[i]) : b[i];
    tb.basis[i] = n + i;
  }

  // Phase 1: minimize the sum of artificials. Reduced costs of the original
  // columns start at -(column sum); the artificials are basic at cost one.
  tb.z.assign(tb.cols, Rational(0));
  tb.obj = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tb.z[j] -= tb.t[i][j];
    tb.obj += tb.t[i][tb.cols];
  }

  bool unbounded = false;
  while (tb.step(n, unbounded)) {
  }
  if (tb.obj != 0) {
    return {LpStatus::infeasible, {}, Rational(0)};
  }

  // Drive leftover artificials out of the (degenerate) basis; an all-zero row
  // is a redundant constraint and gets dropped.
  for (std::size_t i = 0; i < tb.rows;) {
    if (tb.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (tb.t[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col < n) {
      tb.pivot(i, col);
      ++i;
    } else {
      tb.t.erase(tb.t.begin() + static_cast<std::ptrdiff_t>(i));
      tb.basis.erase(tb.basis.begin() + static_cast<std::ptrdiff_t>(i));
      --tb.rows;
    }
  }

  // Phase 2: rebuild reduced costs for the real objective.
  tb.z.assign(tb.cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) tb.z[j] = c[j];
  tb.obj = 0;
  for (std::size_t i = 0; i < tb.rows; ++i) {
    const Rational cb = c[tb.basis[i]];  // basis is artificial-free now
    if (cb == 0) continue;
    for (std::size_t j = 0; j < tb.cols; ++j) tb.z[j] -= cb * tb.t[i][j];
    tb.obj += cb * tb.t[i][tb.cols];
  }

  while (tb.step(n, unbounded)) {
  }
  if (unbounded) {
    return {LpStatus::unbounded, {}, Rational(0)};
  }

  LpResult r;
  r.status = LpStatus::optimal;
  r.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tb.rows; ++i) {
    if (tb.basis[i] < n) r.x[tb.basis[i]] = tb.t[i][tb.cols];
  }
  r.objective = tb.obj;
  return r;
}

}  // namespace gm
