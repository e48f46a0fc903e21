#pragma once

#include <iosfwd>
#include <optional>

#include "gm/signed_components.hpp"

namespace gm {

// Dense rational matrix whose rows/columns are tied to vertex ids.
struct RationalMatrix {
  std::vector<VertexId> index;  // row i <-> index[i]
  std::size_t n = 0;
  std::vector<Rational> a;  // row-major, n*n entries

  static RationalMatrix zero(std::vector<VertexId> ids);
  Rational& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  bool is_zero() const;
  bool is_symmetric() const;
};

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;
};

bool operator==(const Inertia& x, const Inertia& y);
std::ostream& operator<<(std::ostream& os, const Inertia& i);

// Charge matrix of the decorated graph, rows in vertex-list order:
//   h_vv   = s(v)·k_v − Σ_{self-loops e at v} 2/b_e
//   h_vv'  = −Σ_{edges e joining v,v'} 1/b_e   when k_v·k_v' > 0
//   h_vv'  = 0                                  otherwise (v != v')
// with k and s the effective (post-flip) data from the signed components.
// Nonzero off-diagonal entries only join vertices of one class, so the
// matrix is block-diagonal over classes by construction.
RationalMatrix build_hm(const GraphManifoldData& data,
                        const SignedComponents& sc);

// One submatrix per signed class (rows in class-member order). Throws
// CROSS_BLOCK_NONZERO if an entry couples distinct classes — impossible for
// build_hm output, a guard for hand-made matrices.
std::vector<RationalMatrix> block_decompose(const RationalMatrix& h,
                                            const SignedComponents& sc);

// Exact inertia by symmetric congruence elimination: pivot on a nonzero
// diagonal entry while one exists (largest |value| first — a determinism and
// growth choice; Sylvester makes any order correct), and when the remaining
// diagonal is all zero but some off-diagonal entry h_ij isn't, split that
// hyperbolic pair off (one +, one −). Whatever remains is the zero block.
// Throws NOT_SYMMETRIC.
Inertia inertia(const RationalMatrix& h);

// Same elimination, returning as soon as a negative pivot appears. For
// callers that need only the PSD bit.
bool has_negative_eigenvalue(const RationalMatrix& h);

// Basis of ker(h), via exact reduced row echelon form. One vector per free
// column (ascending), with a 1 in the free coordinate — so the basis size
// always equals inertia(h).n_zero.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& h);

// Nowhere-zero kernel tuple when one exists. Scans v(t) = Σ_j t^{j-1}·u_j
// over a kernel basis {u_j} for t = 1, 2, ...: each coordinate is a nonzero
// polynomial of degree < m in t unless it vanishes on the whole kernel, so
// some t <= (m-1)·n + 1 clears all n coordinates. Returns nullopt when the
// kernel is trivial or some coordinate vanishes identically.
std::optional<std::vector<Rational>> supersingular_witness(
    const RationalMatrix& h);

}  // namespace gm
