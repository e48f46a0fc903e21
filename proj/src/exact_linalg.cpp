#include "gm/exact_linalg.hpp"

#include <algorithm>
#include <ostream>

namespace gm {

RationalMatrix RationalMatrix::zero(std::vector<VertexId> ids) {
  RationalMatrix m;
  m.index = std::move(ids);
  m.n = m.index.size();
  m.a.assign(m.n * m.n, Rational(0));
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(),
                     [](const Rational& q) { return q == 0; });
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

bool operator==(const Inertia& x, const Inertia& y) {
  return x.n_plus == y.n_plus && x.n_zero == y.n_zero && x.n_minus == y.n_minus;
}

std::ostream& operator<<(std::ostream& os, const Inertia& i) {
  return os << "(n+ " << i.n_plus << ", n0 " << i.n_zero << ", n- "
            << i.n_minus << ")";
}

RationalMatrix build_hm(const GraphManifoldData& data,
                        const SignedComponents& sc) {
  std::vector<VertexId> ids;
  ids.reserve(data.vertices.size());
  for (const auto& v : data.vertices) ids.push_back(v.id);
  RationalMatrix h = RationalMatrix::zero(std::move(ids));

  for (std::size_t v = 0; v < data.vertices.size(); ++v) {
    h.at(v, v) = Rational(sc.s[v]) * sc.effective_charge[v];
  }
  for (const auto& e : data.edges) {
    const std::size_t a = *data.vertex_index(e.ends[0]);
    const std::size_t b = *data.vertex_index(e.ends[1]);
    if (a == b) {
      h.at(a, a) -= make_rational(2, e.b);
    } else if (sign_of(sc.effective_charge[a]) *
                   sign_of(sc.effective_charge[b]) >
               0) {
      const Rational w = make_rational(1, e.b);
      h.at(a, b) -= w;
      h.at(b, a) -= w;
    }
  }
  return h;
}

std::vector<RationalMatrix> block_decompose(const RationalMatrix& h,
                                            const SignedComponents& sc) {
  // Rows are in vertex-list order for build_hm output, so class_of applies
  // to them directly.
  if (sc.cls.class_of.size() != h.n) {
    throw Error("INDEX_MISMATCH",
                "block_decompose: matrix size does not match component data");
  }
  const std::vector<std::size_t>& class_of_row = sc.cls.class_of;

  for (std::size_t i = 0; i < h.n; ++i) {
    for (std::size_t j = 0; j < h.n; ++j) {
      if (class_of_row[i] != class_of_row[j] && h.at(i, j) != 0) {
        throw Error("CROSS_BLOCK_NONZERO",
                    "nonzero entry couples classes at (" + h.index[i] + ", " +
                        h.index[j] + ")");
      }
    }
  }

  std::vector<RationalMatrix> blocks;
  for (const auto& c : sc.cls.classes) {
    std::vector<VertexId> ids;
    for (std::size_t v : c.members) ids.push_back(h.index[v]);
    RationalMatrix b = RationalMatrix::zero(std::move(ids));
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      for (std::size_t j = 0; j < c.members.size(); ++j) {
        b.at(i, j) = h.at(c.members[i], c.members[j]);
      }
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

namespace {

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Core of the congruence elimination; early_stop_negative makes it return as
// soon as n_minus becomes positive (the partial counts are then meaningless
// for anything but that bit).
Inertia eliminate(const RationalMatrix& h, bool early_stop_negative) {
  if (!h.is_symmetric()) {
    throw Error("NOT_SYMMETRIC", "inertia needs a symmetric matrix");
  }
  std::vector<Rational> a = h.a;
  const std::size_t n = h.n;
  auto at = [&](std::size_t i, std::size_t j) -> Rational& {
    return a[i * n + j];
  };

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  Inertia out;
  while (!active.empty()) {
    // Best diagonal pivot: largest absolute value among nonzero entries.
    std::size_t pivot_pos = active.size();
    for (std::size_t p = 0; p < active.size(); ++p) {
      const Rational& d = at(active[p], active[p]);
      if (d == 0) continue;
      if (pivot_pos == active.size() ||
          abs_q(d) > abs_q(at(active[pivot_pos], active[pivot_pos]))) {
        pivot_pos = p;
      }
    }

    if (pivot_pos != active.size()) {
      const std::size_t i = active[pivot_pos];
      const Rational d = at(i, i);
      if (d > 0) {
        ++out.n_plus;
      } else {
        ++out.n_minus;
        if (early_stop_negative) return out;
      }
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
      // Symmetric Schur update: a_jk -= a_ji a_ik / d.
      for (std::size_t j : active) {
        if (at(j, i) == 0) continue;
        const Rational f = at(j, i) / d;
        for (std::size_t k : active) {
          at(j, k) -= f * at(i, k);
        }
      }
      for (std::size_t j : active) {
        at(j, i) = 0;
        at(i, j) = 0;
      }
      continue;
    }

    // Diagonal is all zero on the active set; find an off-diagonal entry.
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t p = 0; p < active.size() && !found; ++p) {
      for (std::size_t q = p + 1; q < active.size(); ++q) {
        if (at(active[p], active[q]) != 0) {
          pi = active[p];
          pj = active[q];
          found = true;
          break;
        }
      }
    }
    if (!found) {
      out.n_zero += active.size();
      break;
    }

    // Hyperbolic pair [[0,b],[b,0]]: one positive and one negative direction.
    ++out.n_plus;
    ++out.n_minus;
    if (early_stop_negative) return out;
    const Rational b = at(pi, pj);
    active.erase(std::remove(active.begin(), active.end(), pi), active.end());
    active.erase(std::remove(active.begin(), active.end(), pj), active.end());
    // Schur complement against the 2x2 block: a_kl -= (a_ki a_jl + a_kj a_il)/b.
    for (std::size_t k : active) {
      const Rational ki = at(k, pi), kj = at(k, pj);
      if (ki == 0 && kj == 0) continue;
      for (std::size_t l : active) {
        at(k, l) -= (ki * at(pj, l) + kj * at(pi, l)) / b;
      }
    }
    for (std::size_t k : active) {
      at(k, pi) = at(k, pj) = at(pi, k) = at(pj, k) = 0;
    }
  }
  return out;
}

}  // namespace

Inertia inertia(const RationalMatrix& h) { return eliminate(h, false); }

bool has_negative_eigenvalue(const RationalMatrix& h) {
  return eliminate(h, true).n_minus > 0;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& h) {
  const std::size_t n = h.n;
  std::vector<Rational> m = h.a;
  auto at = [&](std::size_t i, std::size_t j) -> Rational& {
    return m[i * n + j];
  };

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pr = row;
    while (pr < n && at(pr, col) == 0) ++pr;
    if (pr == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(at(row, j), at(pr, j));
    const Rational d = at(row, col);
    for (std::size_t j = 0; j < n; ++j) at(row, j) /= d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || at(i, col) == 0) continue;
      const Rational f = at(i, col);
      for (std::size_t j = 0; j < n; ++j) at(i, j) -= f * at(row, j);
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }

  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : pivot_col_of_row) is_pivot[c] = 1;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> u(n, Rational(0));
    u[free] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      u[pivot_col_of_row[r]] = -at(r, free);
    }
    basis.push_back(std::move(u));
  }
  return basis;
}

std::optional<std::vector<Rational>> supersingular_witness(
    const RationalMatrix& h) {
  const auto basis = kernel_basis(h);
  const std::size_t m = basis.size();
  const std::size_t n = h.n;
  if (m == 0) return std::nullopt;

  for (std::size_t i = 0; i < n; ++i) {
    bool all_zero = true;
    for (const auto& u : basis) {
      if (u[i] != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) return std::nullopt;  // coordinate vanishes on the kernel
  }

  const unsigned long t_max = static_cast<unsigned long>((m - 1) * n + 1);
  for (unsigned long t = 1; t <= t_max; ++t) {
    std::vector<Rational> v(n, Rational(0));
    Rational power(1);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) v[i] += power * basis[j][i];
      power *= static_cast<long>(t);
    }
    if (std::none_of(v.begin(), v.end(),
                     [](const Rational& q) { return q == 0; })) {
      return v;
    }
  }
  throw std::logic_error("witness scan exceeded its proven bound");
}

}  // namespace gm
