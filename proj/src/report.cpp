#include "gm/report.hpp"

#include <sstream>

#include "gm/digest.hpp"
#include "gm/version.hpp"

namespace gm {

namespace {

using nlohmann::ordered_json;

const char* yn(bool v) { return v ? "yes" : "no"; }

ordered_json matrix_json(const RationalMatrix& hm) {
  ordered_json j;
  j["order"] = hm.n;
  j["is_zero"] = hm.is_zero();
  j["index"] = hm.index;
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < hm.n; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < hm.n; ++k) row.push_back(rational_to_json(hm.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

ordered_json components_json(const GraphManifoldData& data,
                             const SignedComponents& sc) {
  ordered_json j;
  j["orientation_flipped"] = sc.orientation_flipped;
  j["factor_bipartite"] = sc.factor.bipartite;
  j["has_parts"] = sc.has_parts;
  ordered_json classes = ordered_json::array();
  for (std::size_t ci = 0; ci < sc.cls.classes.size(); ++ci) {
    const SignedClass& c = sc.cls.classes[ci];
    ordered_json cj;
    cj["id"] = c.id;
    ordered_json members = ordered_json::array();
    for (std::size_t vi : c.members) members.push_back(data.vertices[vi].id);
    cj["members"] = std::move(members);
    cj["charge_sign"] = c.sigma;
    cj["side"] = sc.side_of_class[ci];
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  ordered_json e0 = ordered_json::array();
  for (std::size_t ei : sc.factor.e0) e0.push_back(data.edges[ei].id);
  j["e0"] = std::move(e0);
  ordered_json internal = ordered_json::array();
  for (std::size_t ei = 0; ei < data.edges.size(); ++ei)
    if (sc.factor.edge_internal[ei]) internal.push_back(data.edges[ei].id);
  j["internal_edges"] = std::move(internal);
  ordered_json s;
  for (std::size_t vi = 0; vi < data.vertices.size(); ++vi)
    s[data.vertices[vi].id] = sc.s[vi];
  j["s"] = std::move(s);
  j["parity_conflicts"] = sc.parity_conflicts;
  return j;
}

ordered_json certificate_json(const GraphManifoldData& data,
                              const CECertificate& cert) {
  ordered_json j;
  j["strictness"] = cert.strictness == Strictness::strict ? "strict" : "weak";
  ordered_json a;
  for (const Vertex& v : data.vertices) a[v.id] = rational_to_json(cert.a.at(v.id));
  j["a"] = std::move(a);
  ordered_json gamma;
  for (const Edge& e : data.edges) gamma[e.id] = rational_to_json(cert.gamma.at(e.id));
  j["gamma"] = std::move(gamma);
  j["max_abs_gamma"] = rational_to_json(max_abs_gamma(cert));
  return j;
}

ordered_json boundary_json(const BoundaryClasses& bc) {
  ordered_json j;
  j["scale"] = integer_to_json(bc.scale);
  ordered_json tori = ordered_json::array();
  for (const OrientedBoundaryClass& t : bc.tori) {
    ordered_json tj;
    tj["edge"] = t.edge;
    tj["side"] = t.side;
    tj["c_plus"] = ordered_json::array(
        {rational_to_json(t.c_plus[0]), rational_to_json(t.c_plus[1])});
    tj["c_minus"] = ordered_json::array(
        {rational_to_json(t.c_minus[0]), rational_to_json(t.c_minus[1])});
    tori.push_back(std::move(tj));
  }
  j["tori"] = std::move(tori);
  return j;
}

}  // namespace

nlohmann::ordered_json report_to_json(const GraphManifoldData& data,
                                      const AnalysisReport& report) {
  ordered_json j;
  j["verdicts"] = {{"npc", report.verdict_npc},
                   {"virtually_fibered", report.verdict_vf}};
  j["inertia"] = {{"n_plus", report.inertia.n_plus},
                  {"n_zero", report.inertia.n_zero},
                  {"n_minus", report.inertia.n_minus}};
  j["hm"] = matrix_json(report.hm);
  j["supersingular"] = report.supersingular;
  if (report.kernel_witness) {
    ordered_json w = ordered_json::array();
    for (const Rational& x : *report.kernel_witness) w.push_back(rational_to_json(x));
    j["kernel_witness"] = std::move(w);
  } else {
    j["kernel_witness"] = nullptr;
  }
  j["components"] = components_json(data, report.components);
  j["certificate"] = report.certificate
                         ? certificate_json(data, *report.certificate)
                         : ordered_json(nullptr);
  j["boundary_classes"] =
      report.boundary ? boundary_json(*report.boundary) : ordered_json(nullptr);
  j["notes"] = report.notes;
  return j;
}

nlohmann::ordered_json build_envelope(const std::string& input_bytes,
                                      nlohmann::ordered_json report,
                                      std::int64_t timing_ms) {
  ordered_json env;
  env["schema_version"] = 1;
  env["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  env["input_digest"] = sha256_digest(input_bytes);
  env["report"] = std::move(report);
  env["timing_ms"] = timing_ms;
  return env;
}

std::string summary_text(const GraphManifoldData& data,
                         const AnalysisReport& report) {
  std::ostringstream os;
  os << data.vertices.size()
     << (data.vertices.size() == 1 ? " vertex, " : " vertices, ")
     << data.edges.size() << (data.edges.size() == 1 ? " edge\n" : " edges\n");
  os << "inertia " << report.inertia << ", matrix "
     << (report.hm_is_zero ? "zero" : "nonzero")
     << ", supersingular: " << yn(report.supersingular) << "\n";
  os << "npc: " << yn(report.verdict_npc)
     << ", virtually fibered: " << yn(report.verdict_vf) << "\n";
  if (report.certificate) {
    os << "certificate: "
       << (report.certificate->strictness == Strictness::strict ? "strict"
                                                                : "weak")
       << ", max |gamma| = " << format_rational(max_abs_gamma(*report.certificate))
       << "\n";
  } else {
    os << "certificate: none\n";
  }
  for (const std::string& n : report.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace gm
