#include <doctest.h>

#include <algorithm>

#include "gm/decision.hpp"
#include "test_util.hpp"

using namespace gm;

namespace {

CECertificate cert_of(std::initializer_list<std::pair<const char*, Rational>> a,
                      std::initializer_list<std::pair<const char*, Rational>> g,
                      Strictness s = Strictness::weak) {
  CECertificate c;
  c.strictness = s;
  for (const auto& [id, v] : a) c.a[id] = v;
  for (const auto& [id, v] : g) c.gamma[id] = v;
  return c;
}

bool has_note(const AnalysisReport& r, const std::string& needle) {
  return std::any_of(r.notes.begin(), r.notes.end(), [&](const std::string& n) {
    return n.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("max_abs_gamma") {
  auto c = cert_of({{"v0", 1}}, {{"e0", Rational(1, 2)}, {"e1", Rational(-3, 4)}});
  CHECK(max_abs_gamma(c) == Rational(3, 4));
}

TEST_CASE("verify_ce checks positivity, bounds and the equalities") {
  auto g = simple_graph({{"v0", 1}, {"v1", 1}}, {{"e0", "v0", "v1", 1}});

  SUBCASE("the canonical weak solution verifies") {
    CHECK(verify_ce(g, cert_of({{"v0", 1}, {"v1", 1}}, {{"e0", 1}})));
  }
  SUBCASE("|gamma| = 1 fails the strict bound") {
    std::vector<std::string> reasons;
    CHECK(!verify_ce(g,
                     cert_of({{"v0", 1}, {"v1", 1}}, {{"e0", 1}},
                             Strictness::strict),
                     &reasons));
    REQUIRE(!reasons.empty());
    CHECK(reasons[0].find("strict") != std::string::npos);
  }
  SUBCASE("a must be positive everywhere") {
    std::vector<std::string> reasons;
    CHECK(!verify_ce(g, cert_of({{"v0", 1}, {"v1", 0}}, {{"e0", 1}}), &reasons));
    CHECK(!reasons.empty());
  }
  SUBCASE("a broken equality is reported with both sides") {
    std::vector<std::string> reasons;
    CHECK(!verify_ce(g, cert_of({{"v0", 1}, {"v1", 1}}, {{"e0", 0}}), &reasons));
    REQUIRE(!reasons.empty());
    CHECK(reasons[0].find("compatibility fails") != std::string::npos);
  }
  SUBCASE("key sets must match the graph") {
    CHECK(thrown_code([&] {
            verify_ce(g, cert_of({{"v0", 1}, {"v1", 1}}, {}));
          }) == "INDEX_MISMATCH");
    CHECK(thrown_code([&] {
            verify_ce(g, cert_of({{"v0", 1}, {"v1", 1}},
                                 {{"e0", 1}, {"eX", 0}}));
          }) == "INDEX_MISMATCH");
    CHECK(thrown_code([&] {
            verify_ce(g, cert_of({{"v0", 1}, {"vX", 1}}, {{"e0", 1}}));
          }) == "INDEX_MISMATCH");
  }
  SUBCASE("self-loops count both orientations") {
    auto loop = simple_graph({{"v0", 2}}, {{"e0", "v0", "v0", 1}});
    CHECK(verify_ce(loop, cert_of({{"v0", 1}}, {{"e0", 1}})));
    CHECK(!verify_ce(loop, cert_of({{"v0", 1}}, {{"e0", Rational(1, 2)}})));
  }
}

TEST_CASE("kernel-witness certificates") {
  SUBCASE("internal edge takes the class side") {
    auto g = simple_graph({{"v0", 1}, {"v1", 1}}, {{"e0", "v0", "v1", 1}});
    auto sc = analyze_components(g);
    auto c = construct_certificate_supersingular(g, sc, {1, 1});
    CHECK(c.strictness == Strictness::weak);
    CHECK(c.a.at("v0") == 1);
    CHECK(c.gamma.at("e0") == 1);
  }
  SUBCASE("absolute values of the witness become a") {
    auto g = simple_graph({{"v0", 1}, {"v1", 1}}, {{"e0", "v0", "v1", 1}});
    auto sc = analyze_components(g);
    auto c = construct_certificate_supersingular(g, sc, {-2, 2});
    CHECK(c.a.at("v0") == 2);
    CHECK(verify_ce(g, c));
  }
  SUBCASE("edges between classes get gamma zero") {
    auto g = simple_graph({{"v0", 0}, {"v1", 0}}, {{"e0", "v0", "v1", 1}});
    auto sc = analyze_components(g);
    auto c = construct_certificate_supersingular(g, sc, {1, 1});
    CHECK(c.gamma.at("e0") == 0);
    CHECK(verify_ce(g, c));
  }
  SUBCASE("a zero witness coordinate cannot be certified") {
    auto g = simple_graph({{"v0", 0}, {"v1", 0}}, {{"e0", "v0", "v1", 1}});
    auto sc = analyze_components(g);
    CHECK(thrown_code([&] {
            construct_certificate_supersingular(g, sc, {1, 0});
          }) == "VERIFICATION_FAILED");
  }
  SUBCASE("witness length must match") {
    auto g = simple_graph({{"v0", 0}}, {});
    auto sc = analyze_components(g);
    CHECK(thrown_code([&] {
            construct_certificate_supersingular(g, sc, {1, 1});
          }) == "INDEX_MISMATCH");
  }
}

TEST_CASE("strict search") {
  SUBCASE("zero-charge loop solves at the first lp") {
    auto g = simple_graph({{"v0", 0}}, {{"e0", "v0", "v0", 1}});
    auto r = search_certificate_strict(g, std::nullopt, 24);
    REQUIRE(r.certificate.has_value());
    CHECK(r.lp_solves == 1);
    CHECK(r.certificate->strictness == Strictness::strict);
    CHECK(r.certificate->a.at("v0") == 1);
    CHECK(r.certificate->gamma.at("e0") == 0);
    CHECK(verify_ce(g, *r.certificate));
  }
  SUBCASE("zero charges across an edge") {
    auto g = simple_graph({{"v0", 0}, {"v1", 0}}, {{"e0", "v0", "v1", 1}});
    auto r = search_certificate_strict(g, std::nullopt, 24);
    REQUIRE(r.certificate.has_value());
    CHECK(max_abs_gamma(*r.certificate) < 1);
  }
  SUBCASE("mixed-sign triangle needs the descent") {
    auto g = simple_graph(
        {{"v0", 1}, {"v1", -1}, {"v2", 0}},
        {{"e0", "v0", "v1", 1}, {"e1", "v0", "v2", 1}, {"e2", "v1", "v2", 1}});
    auto r = search_certificate_strict(g, std::nullopt, 24);
    REQUIRE(r.certificate.has_value());
    CHECK(r.lp_solves <= 24);
    CHECK(max_abs_gamma(*r.certificate) < 1);
    CHECK(verify_ce(g, *r.certificate));
  }
  SUBCASE("positive definite instances have no solution at all") {
    auto g = simple_graph({{"v0", 1}, {"v1", -1}}, {{"e0", "v0", "v1", 1}});
    auto r = search_certificate_strict(g, std::nullopt, 50);
    CHECK(!r.certificate.has_value());
    CHECK(r.lp_solves >= 1);
    CHECK(r.lp_solves <= 50);
  }
  SUBCASE("a zero budget does nothing") {
    auto g = simple_graph({{"v0", 0}}, {{"e0", "v0", "v0", 1}});
    auto r = search_certificate_strict(g, std::nullopt, 0);
    CHECK(!r.certificate.has_value());
    CHECK(r.lp_solves == 0);
  }
}

TEST_CASE("boundary classes") {
  auto g = simple_graph({{"v0", 1}, {"v1", 1}}, {{"e0", "v0", "v1", 1}});
  auto cert = cert_of({{"v0", 1}, {"v1", 1}}, {{"e0", 1}});

  SUBCASE("gamma 1 concentrates everything in c_plus") {
    auto bc = boundary_classes(g, cert);
    CHECK(bc.scale == 1);
    REQUIRE(bc.tori.size() == 2);
    CHECK(bc.tori[0].edge == "e0");
    CHECK(bc.tori[0].side == 0);
    CHECK(bc.tori[0].c_plus[0] == 1);
    CHECK(bc.tori[0].c_plus[1] == 1);
    CHECK(bc.tori[0].c_minus[0] == 0);
    CHECK(bc.tori[0].c_minus[1] == 0);
  }
  SUBCASE("negative pairing sign moves everything to c_minus") {
    g.edges[0].bw_sign = -1;
    auto bc = boundary_classes(g, cert);
    CHECK(bc.scale == 1);
    CHECK(bc.tori[0].c_plus[0] == 0);
    CHECK(bc.tori[0].c_plus[1] == 0);
    CHECK(bc.tori[0].c_minus[0] == 1);
    CHECK(bc.tori[0].c_minus[1] == -1);
  }
  SUBCASE("gamma 0 splits halves and doubles the scale") {
    auto loop = simple_graph({{"v0", 0}}, {{"e0", "v0", "v0", 1}});
    auto c = cert_of({{"v0", 1}}, {{"e0", 0}}, Strictness::strict);
    auto bc = boundary_classes(loop, c);
    CHECK(bc.scale == 2);
    REQUIRE(bc.tori.size() == 2);
    CHECK(bc.tori[0].c_plus[0] == 1);
    CHECK(bc.tori[0].c_plus[1] == 1);
    CHECK(bc.tori[0].c_minus[0] == -1);
    CHECK(bc.tori[0].c_minus[1] == 1);
  }
  SUBCASE("a non-verifying certificate trips the charge identity") {
    auto bad = cert_of({{"v0", 1}, {"v1", 2}}, {{"e0", 1}});
    CHECK(thrown_code([&] { boundary_classes(g, bad); }) ==
          "IDENTITY_VIOLATION");
  }
  SUBCASE("b appears in the scale") {
    auto g2 = simple_graph({{"v0", 0}, {"v1", 0}}, {{"e0", "v0", "v1", 2}});
    auto c2 = cert_of({{"v0", 1}, {"v1", 1}}, {{"e0", 0}});
    REQUIRE(verify_ce(g2, c2));
    auto bc = boundary_classes(g2, c2);
    CHECK(bc.scale == 4);  // halves of 1/(2b) with b = 2
    CHECK(bc.tori[0].c_plus[0] == 1);
    CHECK(bc.tori[0].c_plus[1] == 1);
    CHECK(bc.tori[0].c_minus[0] == -1);
    CHECK(bc.tori[0].c_minus[1] == 1);
  }
}

TEST_CASE("decide end to end") {
  SUBCASE("definite instance: no certificate exists") {
    auto r = decide(simple_graph({{"v0", 1}, {"v1", -1}},
                                 {{"e0", "v0", "v1", 1}}));
    CHECK(!r.verdict_npc);
    CHECK(!r.verdict_vf);
    CHECK(!r.certificate);
    CHECK(!r.boundary);
    CHECK(has_note(r, "weak compatibility solutions do not exist"));
  }
  SUBCASE("loop with zero charge: strict certificate in one lp") {
    auto r = decide(simple_graph({{"v0", 0}}, {{"e0", "v0", "v0", 1}}));
    CHECK(r.verdict_npc);
    CHECK(r.verdict_vf);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->strictness == Strictness::strict);
    CHECK(has_note(r, "strict certificate found after 1 lp solve(s)"));
    CHECK(r.boundary.has_value());
  }
  SUBCASE("negated charges: certificate stated for the input") {
    auto g = simple_graph({{"v0", -1}, {"v1", -1}}, {{"e0", "v0", "v1", 1}});
    auto r = decide(g);
    CHECK(!r.verdict_npc);
    CHECK(r.verdict_vf);
    CHECK(r.components.orientation_flipped);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->gamma.at("e0") == -1);
    CHECK(verify_ce(g, *r.certificate));
    CHECK(has_note(r, "negated from the reoriented construction"));
    CHECK(r.boundary.has_value());
  }
  SUBCASE("zero matrix blocked by an internal loop") {
    auto r = decide(simple_graph({{"v0", 2}}, {{"e0", "v0", "v0", 1}}));
    CHECK(!r.verdict_npc);
    CHECK(r.verdict_vf);
    CHECK(has_note(r, "internal to a signed class"));
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->strictness == Strictness::weak);
  }
  SUBCASE("certification can be disabled") {
    DecideOptions off;
    off.certify = false;
    auto r = decide(simple_graph({{"v0", 0}}, {{"e0", "v0", "v0", 1}}), off);
    CHECK(r.verdict_npc);
    CHECK(!r.certificate);
    CHECK(has_note(r, "certificate search disabled"));
  }
  SUBCASE("invalid data is rejected up front") {
    auto g = simple_graph({{"v0", 1}, {"v1", 1}, {"v2", 1}},
                          {{"e0", "v0", "v1", 1}});
    CHECK(thrown_code([&] { decide(g); }) == "DISCONNECTED_GRAPH");
  }
}
