#pragma once

#include <map>
#include <optional>

#include "gm/exact_linalg.hpp"

namespace gm {

// A solution {a, gamma} of the compatibility system
//
//   k_v · a_v = Σ_{w ∈ ∂v}  gamma_e(w) · a_head(w) / b_e(w)      for every v,
//
// where a self-loop contributes both of its orientations. a is positive
// everywhere; strict certificates have |gamma_e| < 1 on every edge, weak ones
// |gamma_e| <= 1. Strict solutions witness the npc verdict, weak ones the
// fibering verdict.
enum class Strictness { strict, weak };

struct CECertificate {
  std::map<VertexId, Rational> a;
  std::map<EdgeId, Rational> gamma;
  Strictness strictness = Strictness::weak;
};

Rational max_abs_gamma(const CECertificate& cert);

// Exact check of the compatibility equalities against the data's own charges,
// plus a_v > 0 everywhere and the bound declared by cert.strictness. Key sets
// must equal the data's vertex/edge id sets (INDEX_MISMATCH otherwise). When
// reasons is non-null every failed check appends one line instead of
// short-circuiting.
bool verify_ce(const GraphManifoldData& data, const CECertificate& cert,
               std::vector<std::string>* reasons = nullptr);

// Weak certificate from a nowhere-zero kernel tuple of the charge matrix:
// a_v = |l_v|; gamma_e = side of the edge's class (+1 on P, -1 on N) for
// edges internal to a class, 0 for edges joining distinct classes. When the
// sign construction negated the charges, the emitted gammas are negated so
// the certificate verifies against the input charges. Intended for matrices
// with n_minus = 0 and parts assigned; the result is verified exactly and
// VERIFICATION_FAILED is thrown if it does not check out.
CECertificate construct_certificate_supersingular(
    const GraphManifoldData& data, const SignedComponents& sc,
    const std::vector<Rational>& witness);

// Best-effort strict search. For a fixed positive tuple a the system is
// linear in gamma, so one exact LP minimizes t subject to the equalities and
// -t <= gamma_e <= t; the outer loop is coordinate descent on a over a
// rational factor grid (coarse steps first, repeating the last successful
// move), seeded with the all-ones tuple and with |witness| when given.
// Stops as soon as some LP optimum drops below 1, or when the budget of LP
// solves is exhausted, or at a local minimum of t*. An empty result leaves
// the caller's verdict unaffected.
struct StrictSearchResult {
  std::optional<CECertificate> certificate;
  int lp_solves = 0;
};

StrictSearchResult search_certificate_strict(
    const GraphManifoldData& data,
    const std::optional<std::vector<Rational>>& seed_witness, int max_iters);

// Boundary classes of the horizontal surface data carried by a verifying
// certificate. For the orientation w of edge e running tail -> head,
//
//   c_w^± = (1 ± γ'_e) / (2 b_w) · (a_tail · f_{-w}  ±  a_head · f_w),
//
// with b_w = bw_sign · b_e and γ'_e = sgn(b_w) · γ_e, stored as coefficient
// pairs on the basis (f_w, f_{-w}). scale is the least positive integer
// making every coefficient integral after multiplying all a_v by it (the
// stored coefficients are already scaled). Two identities are asserted
// exactly for every w, with x ∧_w y = (x1·y2 − x2·y1) · b_w:
//   (1)  f_w ∧_w (c_w^+ + c_w^-) = scale · a_tail(w)
//   (2)  Σ_{w ∈ ∂v} (f_{-w}/b_w) ∧_{-w} (c_w^+ + c_w^-) = scale · k_v · a_v
// Violation of either throws IDENTITY_VIOLATION (a non-verifying certificate
// trips (2), which is the compatibility equality in disguise).
struct OrientedBoundaryClass {
  EdgeId edge;
  int side = 0;  // orientation w: tail = ends[side]
  Rational c_plus[2];
  Rational c_minus[2];
};

struct BoundaryClasses {
  mpz_class scale;
  std::vector<OrientedBoundaryClass> tori;  // both orientations, edge order
};

BoundaryClasses boundary_classes(const GraphManifoldData& data,
                                 const CECertificate& cert);

// ---------------------------------------------------------------------------

struct DecideOptions {
  bool certify = true;  // attempt certificate construction
  int max_iters = 200;  // strict-search budget, counted in LP solves
};

struct AnalysisReport {
  bool verdict_npc = false;
  bool verdict_vf = false;
  Inertia inertia;
  bool hm_is_zero = false;
  bool supersingular = false;
  bool has_internal_edges = false;
  std::optional<std::vector<Rational>> kernel_witness;  // vertex-list order
  std::optional<CECertificate> certificate;
  std::optional<BoundaryClasses> boundary;
  SignedComponents components;
  RationalMatrix hm;
  std::vector<std::string> notes;
};

// Full analysis of validated data:
//   verdict_npc  ⇔  n_minus > 0, or the matrix is zero with every edge
//                   joining distinct signed classes (an internal edge under a
//                   zero matrix pins |gamma| = 1, leaving no strict solution);
//   verdict_vf   ⇔  n_minus > 0 or the matrix annihilates a nowhere-zero
//                   tuple.
// npc implies fibering structurally (a zero matrix is supersingular). When
// certify is set, npc instances get a strict-certificate search and
// non-npc fibered instances get the kernel-witness construction; failures
// are recorded in notes, never silently dropped. Boundary classes are
// attached whenever a certificate is.
AnalysisReport decide(const GraphManifoldData& data,
                      const DecideOptions& opts = {});

}  // namespace gm
