#include <doctest.h>

#include <algorithm>

#include "gm/graph.hpp"
#include "test_util.hpp"

using namespace gm;

namespace {

bool has_violation(const ValidationResult& r, const std::string& code) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

}  // namespace

TEST_CASE("validate accepts a sound instance") {
  auto g = simple_graph({{"v0", 1}, {"v1", -1}}, {{"e0", "v0", "v1", 1}});
  CHECK(validate(g).ok());
  CHECK_NOTHROW(validate_or_throw(g));
}

TEST_CASE("validate flags every defect at once") {
  GraphManifoldData g;
  CHECK(has_violation(validate(g), "EMPTY_GRAPH"));

  g = simple_graph({{"v0", 1}, {"v0", 2}, {"v1", 0}},
                   {{"e0", "v0", "vX", 0}, {"e0", "v0", "v0", 1}});
  g.edges[1].bw_sign = 2;
  auto r = validate(g);
  CHECK(has_violation(r, "DUPLICATE_ID"));
  CHECK(has_violation(r, "UNKNOWN_VERTEX"));
  CHECK(has_violation(r, "NON_POSITIVE_B"));
  CHECK(has_violation(r, "BAD_SIGN"));
  CHECK(r.violations.size() >= 5);  // duplicate vertex + duplicate edge + rest
}

TEST_CASE("validate requires connectivity") {
  auto g = simple_graph({{"v0", 1}, {"v1", 1}, {"v2", 1}},
                        {{"e0", "v0", "v1", 1}});
  auto r = validate(g);
  CHECK(has_violation(r, "DISCONNECTED_GRAPH"));
  CHECK(thrown_code([&] { validate_or_throw(g); }) == "DISCONNECTED_GRAPH");
}

TEST_CASE("oriented_star lists both sides of a self-loop") {
  auto g = simple_graph({{"v0", 0}, {"v1", 0}},
                        {{"e0", "v0", "v0", 1}, {"e1", "v0", "v1", 2}});
  auto star0 = oriented_star(g, 0);
  REQUIRE(star0.size() == 3);  // loop twice + e1 once
  CHECK(star0[0].edge == 0);
  CHECK(star0[1].edge == 0);
  CHECK(star0[0].side != star0[1].side);
  CHECK(star0[2].edge == 1);
  for (const auto& w : star0) CHECK(w.tail == 0);
  CHECK(star0[2].head == 1);

  auto star1 = oriented_star(g, 1);
  REQUIRE(star1.size() == 1);
  CHECK(star1[0].head == 0);

  CHECK(all_oriented_edges(g).size() == 2 * g.edges.size());
}

TEST_CASE("negate_charges flips every sign") {
  auto g = simple_graph({{"v0", 2}, {"v1", -3}}, {{"e0", "v0", "v1", 1}});
  negate_charges(g);
  CHECK(g.vertices[0].charge == -2);
  CHECK(g.vertices[1].charge == 3);
}

TEST_CASE("renamed and reordered preserve structure") {
  auto g = simple_graph({{"v0", 1}, {"v1", 2}},
                        {{"e0", "v0", "v1", 1}, {"e1", "v1", "v1", 2}});
  auto h = renamed(g, {{"v0", "v1"}, {"v1", "v0"}}, {{"e0", "x"}});
  CHECK(h.vertices[0].id == "v1");
  CHECK(h.vertices[0].charge == 1);
  CHECK(h.edges[0].id == "x");
  CHECK(h.edges[0].ends[0] == "v1");
  CHECK(h.edges[1].ends[0] == "v0");  // loop followed its vertex

  auto r = reordered(g, {1, 0}, {1, 0});
  CHECK(r.vertices[0].id == "v1");
  CHECK(r.edges[0].id == "e1");
  CHECK(validate(r).ok());
}

TEST_CASE("gluing ingestion derives charges and intersection numbers") {
  GluingForm f;
  f.vertex_ids = {"v0", "v1"};
  GluingDatum d;
  d.id = "e0";
  d.ends[0] = "v0";
  d.ends[1] = "v1";

  SUBCASE("upper-triangular-like gluing gives equal unit charges") {
    d.m[0][0] = 1, d.m[0][1] = 1, d.m[1][0] = 0, d.m[1][1] = -1;
    f.edges = {d};
    auto g = ingest_gluing(f);
    CHECK(g.vertices[0].charge == 1);
    CHECK(g.vertices[1].charge == 1);
    CHECK(g.edges[0].b == 1);
    CHECK(g.edges[0].bw_sign == 1);
  }

  SUBCASE("swap gluing gives zero charges") {
    d.m[0][0] = 0, d.m[0][1] = 1, d.m[1][0] = 1, d.m[1][1] = 0;
    f.edges = {d};
    auto g = ingest_gluing(f);
    CHECK(g.vertices[0].charge == 0);
    CHECK(g.vertices[1].charge == 0);
  }

  SUBCASE("negative upper-right entry sets bw_sign") {
    d.m[0][0] = 0, d.m[0][1] = -1, d.m[1][0] = -1, d.m[1][1] = 0;
    f.edges = {d};
    auto g = ingest_gluing(f);
    CHECK(g.edges[0].b == 1);
    CHECK(g.edges[0].bw_sign == -1);
  }

  SUBCASE("determinant must be -1") {
    d.m[0][0] = 1, d.m[0][1] = 1, d.m[1][0] = 0, d.m[1][1] = 1;
    f.edges = {d};
    CHECK(thrown_code([&] { ingest_gluing(f); }) == "BAD_DETERMINANT");
  }

  SUBCASE("matching fibres are rejected") {
    d.m[0][0] = 1, d.m[0][1] = 0, d.m[1][0] = 0, d.m[1][1] = -1;
    f.edges = {d};
    CHECK(thrown_code([&] { ingest_gluing(f); }) == "FIBER_MATCH");
  }
}

TEST_CASE("gluing ingestion accumulates both sides of a self-loop") {
  GluingForm f;
  f.vertex_ids = {"v0"};
  GluingDatum d;
  d.id = "e0";
  d.ends[0] = "v0";
  d.ends[1] = "v0";
  d.m[0][0] = 1, d.m[0][1] = 2, d.m[1][0] = 1, d.m[1][1] = 1;  // det -1
  f.edges = {d};
  auto g = ingest_gluing(f);
  CHECK(g.edges[0].b == 2);
  CHECK(g.vertices[0].charge == 0);  // 1/2 from one side, -1/2 from the other
}

TEST_CASE("gluing ingestion rejects unknown endpoints") {
  GluingForm f;
  f.vertex_ids = {"v0"};
  GluingDatum d;
  d.id = "e0";
  d.ends[0] = "v0";
  d.ends[1] = "vX";
  d.m[0][0] = 0, d.m[0][1] = 1, d.m[1][0] = 1, d.m[1][1] = 0;
  f.edges = {d};
  CHECK(thrown_code([&] { ingest_gluing(f); }) == "UNKNOWN_VERTEX");
}
