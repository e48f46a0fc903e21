#include "gm/decision.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "gm/simplex.hpp"

namespace gm {

namespace {

Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

void check_cert_indexes(const GraphManifoldData& data,
                        const CECertificate& cert) {
  if (cert.a.size() != data.vertices.size() ||
      cert.gamma.size() != data.edges.size()) {
    throw Error("INDEX_MISMATCH",
                "certificate keys do not match the graph's id sets");
  }
  for (const auto& v : data.vertices) {
    if (!cert.a.count(v.id)) {
      throw Error("INDEX_MISMATCH", "certificate has no a-value for vertex '" +
                                        v.id + "'");
    }
  }
  for (const auto& e : data.edges) {
    if (!cert.gamma.count(e.id)) {
      throw Error("INDEX_MISMATCH",
                  "certificate has no gamma for edge '" + e.id + "'");
    }
  }
}

}  // namespace

Rational max_abs_gamma(const CECertificate& cert) {
  Rational m(0);
  for (const auto& [id, g] : cert.gamma) m = std::max(m, rational_abs(g));
  return m;
}

bool verify_ce(const GraphManifoldData& data, const CECertificate& cert,
               std::vector<std::string>* reasons) {
  check_cert_indexes(data, cert);
  bool ok = true;
  auto fail = [&](const std::string& msg) {
    ok = false;
    if (reasons) reasons->push_back(msg);
  };

  for (const auto& [id, av] : cert.a) {
    if (av <= 0) fail("a[" + id + "] = " + format_rational(av) + " is not positive");
  }
  const bool strict = cert.strictness == Strictness::strict;
  for (const auto& [id, g] : cert.gamma) {
    const Rational m = rational_abs(g);
    if (m > 1 || (strict && m == 1)) {
      fail("|gamma[" + id + "]| = " + format_rational(m) +
           (strict ? " violates the strict bound < 1" : " exceeds 1"));
    }
  }
  for (std::size_t i = 0; i < data.vertices.size(); ++i) {
    const Vertex& v = data.vertices[i];
    const Rational lhs = v.charge * cert.a.at(v.id);
    Rational rhs(0);
    for (const OrientedEdge& w : oriented_star(data, i)) {
      const Edge& e = data.edges[w.edge];
      rhs += cert.gamma.at(e.id) * cert.a.at(data.vertices[w.head].id) / e.b;
    }
    if (lhs != rhs) {
      fail("compatibility fails at '" + v.id + "': " + format_rational(lhs) +
           " != " + format_rational(rhs));
    }
  }
  return ok;
}

CECertificate construct_certificate_supersingular(
    const GraphManifoldData& data, const SignedComponents& sc,
    const std::vector<Rational>& witness) {
  if (witness.size() != data.vertices.size()) {
    throw Error("INDEX_MISMATCH", "witness length does not match vertex count");
  }
  CECertificate cert;
  cert.strictness = Strictness::weak;
  for (std::size_t i = 0; i < data.vertices.size(); ++i) {
    cert.a[data.vertices[i].id] = rational_abs(witness[i]);
  }
  // Internal edges take the side of their class; the gammas are negated when
  // the construction ran on negated charges, so the certificate holds for the
  // charges as given.
  const int flip = sc.orientation_flipped ? -1 : 1;
  for (std::size_t j = 0; j < data.edges.size(); ++j) {
    const Edge& e = data.edges[j];
    int g = 0;
    if (sc.factor.edge_internal[j]) {
      const std::size_t vi = *data.vertex_index(e.ends[0]);
      const std::size_t cls = sc.cls.class_of[vi];
      const int side = sc.has_parts ? sc.side_of_class[cls] : 0;
      g = flip * side;
    }
    cert.gamma[e.id] = Rational(g);
  }
  std::vector<std::string> reasons;
  if (!verify_ce(data, cert, &reasons)) {
    std::string detail = "kernel-witness certificate does not verify";
    for (const auto& r : reasons) detail += "; " + r;
    throw Error("VERIFICATION_FAILED", detail);
  }
  return cert;
}

namespace {

// For fixed positive a the compatibility system is linear in gamma; one LP
// minimizes t subject to it and -t <= gamma_e <= t. Variable layout:
// [g_0..g_{m-1}, s_0..s_{m-1}, t] with gamma_e = g_e - t and g_e + s_e = 2t.
struct GammaLp {
  bool feasible = false;
  Rational t_star;
  std::vector<Rational> gamma;
};

GammaLp eval_gamma_lp(const GraphManifoldData& data,
                      const std::vector<Rational>& a) {
  const std::size_t n = data.vertices.size();
  const std::size_t m = data.edges.size();
  const std::size_t nv = 2 * m + 1;

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  rows.reserve(n + m);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(nv, Rational(0));
    Rational tcoef(0);
    for (const OrientedEdge& w : oriented_star(data, i)) {
      const Rational c = a[w.head] / data.edges[w.edge].b;
      row[w.edge] += c;
      tcoef += c;
    }
    row[2 * m] = -tcoef;
    rows.push_back(std::move(row));
    rhs.push_back(data.vertices[i].charge * a[i]);
  }
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<Rational> row(nv, Rational(0));
    row[e] = 1;
    row[m + e] = 1;
    row[2 * m] = -2;
    rows.push_back(std::move(row));
    rhs.push_back(Rational(0));
  }
  std::vector<Rational> cost(nv, Rational(0));
  cost[2 * m] = 1;

  const LpResult r = simplex_solve(rows, rhs, cost);
  GammaLp out;
  if (r.status != LpStatus::optimal) return out;  // no gamma fits this a
  out.feasible = true;
  out.t_star = r.objective;
  out.gamma.resize(m);
  for (std::size_t e = 0; e < m; ++e) out.gamma[e] = r.x[e] - r.x[2 * m];
  return out;
}

}  // namespace

StrictSearchResult search_certificate_strict(
    const GraphManifoldData& data,
    const std::optional<std::vector<Rational>>& seed_witness, int max_iters) {
  StrictSearchResult res;
  const std::size_t n = data.vertices.size();
  if (n == 0 || max_iters <= 0) return res;

  std::vector<std::vector<Rational>> seeds;
  seeds.emplace_back(n, Rational(1));
  if (seed_witness && seed_witness->size() == n) {
    std::vector<Rational> w;
    w.reserve(n);
    bool positive = true;
    for (const Rational& x : *seed_witness) {
      w.push_back(rational_abs(x));
      positive = positive && w.back() > 0;
    }
    if (positive && w != seeds[0]) seeds.push_back(std::move(w));
  }

  int budget = max_iters;
  bool have_best = false;
  Rational best_t;
  std::vector<Rational> best_a = seeds[0];
  std::vector<Rational> best_gamma;

  auto try_a = [&](const std::vector<Rational>& a) -> bool {
    if (budget <= 0) return false;
    --budget;
    ++res.lp_solves;
    const GammaLp ev = eval_gamma_lp(data, a);
    if (!ev.feasible) return false;
    if (!have_best || ev.t_star < best_t) {
      have_best = true;
      best_t = ev.t_star;
      best_a = a;
      best_gamma = ev.gamma;
      return true;
    }
    return false;
  };

  for (const auto& s : seeds) {
    try_a(s);
    if (have_best && best_t < 1) break;
  }

  // Coordinate descent on a: coarse factors first, and repeat the previous
  // successful move before rescanning (a good direction usually pays twice).
  static const Rational kFactors[] = {
      Rational(2),    Rational(1, 2), Rational(3),    Rational(1, 3),
      Rational(3, 2), Rational(2, 3), Rational(4, 3), Rational(3, 4),
      Rational(5, 4), Rational(4, 5)};
  const std::size_t nf = sizeof(kFactors) / sizeof(kFactors[0]);
  bool have_move = false;
  std::size_t move_coord = 0, move_factor = 0;

  while (budget > 0 && !(have_best && best_t < 1)) {
    bool improved = false;
    if (have_move) {
      std::vector<Rational> cand = best_a;
      cand[move_coord] *= kFactors[move_factor];
      improved = try_a(cand);
      if (!improved) have_move = false;
    }
    if (!improved) {
      for (std::size_t coord = 0; coord < n && !improved && budget > 0;
           ++coord) {
        for (std::size_t f = 0; f < nf && !improved && budget > 0; ++f) {
          std::vector<Rational> cand = best_a;
          cand[coord] *= kFactors[f];
          if (try_a(cand)) {
            improved = true;
            have_move = true;
            move_coord = coord;
            move_factor = f;
          }
        }
      }
    }
    if (!improved) break;  // local minimum of t*
  }

  if (have_best && best_t < 1) {
    CECertificate cert;
    cert.strictness = Strictness::strict;
    for (std::size_t i = 0; i < n; ++i) {
      cert.a[data.vertices[i].id] = best_a[i];
    }
    for (std::size_t e = 0; e < data.edges.size(); ++e) {
      cert.gamma[data.edges[e].id] = best_gamma[e];
    }
    if (!verify_ce(data, cert)) {
      throw Error("VERIFICATION_FAILED",
                  "strict search produced a non-verifying certificate");
    }
    res.certificate = std::move(cert);
  }
  return res;
}

BoundaryClasses boundary_classes(const GraphManifoldData& data,
                                 const CECertificate& cert) {
  check_cert_indexes(data, cert);

  // x ∧_w y for classes written on the basis (f_w, f_{-w}).
  auto wedge = [](const Rational& x0, const Rational& x1, const Rational& y0,
                  const Rational& y1, const Rational& bw) -> Rational {
    return (x0 * y1 - x1 * y0) * bw;
  };

  struct Raw {
    Rational cp[2], cm[2];  // coefficients on (f_w, f_{-w})
    Rational bw;
  };
  std::vector<Raw> raw(2 * data.edges.size());
  mpz_class scale(1);
  for (std::size_t j = 0; j < data.edges.size(); ++j) {
    const Edge& e = data.edges[j];
    const Rational bw(e.bw_sign * e.b);
    const Rational gp = e.bw_sign * cert.gamma.at(e.id);  // γ'_e
    for (int side = 0; side < 2; ++side) {
      const Rational& a_tail = cert.a.at(e.ends[side]);
      const Rational& a_head = cert.a.at(e.ends[1 - side]);
      Raw& r = raw[2 * j + side];
      r.bw = bw;
      const Rational cp = (1 + gp) / (2 * bw);
      const Rational cm = (1 - gp) / (2 * bw);
      r.cp[0] = cp * a_head;
      r.cp[1] = cp * a_tail;
      r.cm[0] = -cm * a_head;
      r.cm[1] = cm * a_tail;
      for (const Rational* c : {r.cp, r.cm}) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                c[0].get_den().get_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                c[1].get_den().get_mpz_t());
      }
    }
  }

  BoundaryClasses out;
  out.scale = scale;
  const Rational N(scale);
  out.tori.reserve(raw.size());
  for (std::size_t j = 0; j < data.edges.size(); ++j) {
    for (int side = 0; side < 2; ++side) {
      const Raw& r = raw[2 * j + side];
      OrientedBoundaryClass cls;
      cls.edge = data.edges[j].id;
      cls.side = side;
      for (int i = 0; i < 2; ++i) {
        cls.c_plus[i] = N * r.cp[i];
        cls.c_minus[i] = N * r.cm[i];
      }
      // Identity (1): f_w ∧_w (c_w^+ + c_w^-) equals the scaled a at the
      // initiating vertex, whichever orientation is taken.
      const Rational c0 = cls.c_plus[0] + cls.c_minus[0];
      const Rational c1 = cls.c_plus[1] + cls.c_minus[1];
      const Rational lhs = wedge(Rational(1), Rational(0), c0, c1, r.bw);
      const Rational want = N * cert.a.at(data.edges[j].ends[side]);
      if (lhs != want) {
        throw Error("IDENTITY_VIOLATION",
                    "fibre pairing with the boundary class of edge '" +
                        data.edges[j].id + "' gives " + format_rational(lhs) +
                        ", expected " + format_rational(want));
      }
      out.tori.push_back(std::move(cls));
    }
  }

  // Identity (2): summing (f_{-w}/b_w) ∧_{-w} c_w over the star of v returns
  // the scaled charge equation — the compatibility equality in disguise.
  for (std::size_t i = 0; i < data.vertices.size(); ++i) {
    Rational sum(0);
    for (const OrientedEdge& w : oriented_star(data, i)) {
      const OrientedBoundaryClass& cls = out.tori[2 * w.edge + w.side];
      const Rational& bw = raw[2 * w.edge + w.side].bw;
      const Rational c0 = cls.c_plus[0] + cls.c_minus[0];
      const Rational c1 = cls.c_plus[1] + cls.c_minus[1];
      // (f_{-w}/b_w) ∧_{-w} c_w = -( (0, 1/b_w) ∧_w (c0, c1) )
      sum += -wedge(Rational(0), 1 / bw, c0, c1, bw);
    }
    const Rational want =
        N * data.vertices[i].charge * cert.a.at(data.vertices[i].id);
    if (sum != want) {
      throw Error("IDENTITY_VIOLATION",
                  "boundary classes around '" + data.vertices[i].id +
                      "' sum to " + format_rational(sum) + ", expected " +
                      format_rational(want));
    }
  }
  return out;
}

AnalysisReport decide(const GraphManifoldData& data,
                      const DecideOptions& opts) {
  validate_or_throw(data);

  AnalysisReport rep;
  rep.components = analyze_components(data);
  const SignedComponents& sc = rep.components;
  rep.hm = build_hm(data, sc);
  rep.inertia = inertia(rep.hm);
  rep.hm_is_zero = rep.hm.is_zero();
  rep.kernel_witness = supersingular_witness(rep.hm);
  rep.supersingular = rep.kernel_witness.has_value();
  rep.has_internal_edges =
      std::find(sc.factor.edge_internal.begin(), sc.factor.edge_internal.end(),
                char(1)) != sc.factor.edge_internal.end();

  rep.verdict_npc = rep.inertia.n_minus > 0 ||
                    (rep.hm_is_zero && !rep.has_internal_edges);
  rep.verdict_vf = rep.inertia.n_minus > 0 || rep.supersingular;

  auto note = [&](std::string text) { rep.notes.push_back(std::move(text)); };

  if (sc.orientation_flipped) {
    note("charges were globally negated (orientation reversal) so the "
         "anchoring class carries positive charge");
  }
  for (const auto& id : sc.parity_conflicts) {
    const auto it = std::find_if(
        sc.cls.classes.begin(), sc.cls.classes.end(),
        [&](const SignedClass& c) { return c.id == id; });
    const std::size_t ci =
        static_cast<std::size_t>(it - sc.cls.classes.begin());
    note("parity conflict: class '" + id + "' has charge sign " +
         (it->sigma > 0 ? "+1" : "-1") + " but the two-coloring puts it on side " +
         (sc.side_of_class[ci] > 0 ? "+1" : "-1"));
  }

  if (rep.inertia.n_minus > 0) {
    note("npc metric exists: the charge matrix has a negative eigenvalue");
    note("virtually fibered: follows from the npc metric");
  } else {
    if (rep.verdict_npc) {
      note("npc metric exists: the charge matrix is zero and every edge "
           "joins distinct signed classes");
    } else if (rep.hm_is_zero) {
      std::string culprit;
      for (std::size_t j = 0; j < data.edges.size(); ++j) {
        if (sc.factor.edge_internal[j]) {
          culprit = data.edges[j].id;
          break;
        }
      }
      note("no npc metric: the charge matrix is zero but edge '" + culprit +
           "' is internal to a signed class, which pins |gamma| = 1 in every "
           "compatibility solution");
    } else {
      note("no npc metric: the charge matrix is positive semidefinite and "
           "nonzero");
    }
    if (rep.supersingular) {
      note("virtually fibered: the charge matrix annihilates a nowhere-zero "
           "tuple");
    } else {
      note("not virtually fibered: the charge matrix is positive "
           "semidefinite and every kernel tuple has a zero entry");
    }
  }

  if (!opts.certify) {
    note("certificate search disabled");
    return rep;
  }

  if (rep.verdict_npc) {
    const StrictSearchResult sr =
        search_certificate_strict(data, rep.kernel_witness, opts.max_iters);
    if (sr.certificate) {
      rep.certificate = *sr.certificate;
      note("strict certificate found after " + std::to_string(sr.lp_solves) +
           " lp solve(s), max |gamma| = " +
           format_rational(max_abs_gamma(*rep.certificate)));
    } else {
      note("strict certificate not found within " +
           std::to_string(opts.max_iters) +
           " lp solve(s); the verdict rests on the matrix criteria");
    }
  } else if (rep.verdict_vf) {
    try {
      rep.certificate =
          construct_certificate_supersingular(data, sc, *rep.kernel_witness);
      note("weak certificate built from the kernel witness");
      if (sc.orientation_flipped) {
        note("certificate gammas are stated for the input charges (negated "
             "from the reoriented construction)");
      }
    } catch (const Error& err) {
      note(std::string("certificate construction failed: ") + err.code() +
           ": " + err.what());
    }
  } else {
    note("no certificate: weak compatibility solutions do not exist");
  }

  if (rep.certificate) {
    rep.boundary = boundary_classes(data, *rep.certificate);
  }
  return rep;
}

}  // namespace gm
