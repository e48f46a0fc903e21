#include <doctest.h>

#include "gm/signed_components.hpp"
#include "test_util.hpp"

using namespace gm;

TEST_CASE("opposite charges give two classes on opposite sides") {
  auto g = simple_graph({{"v0", 1}, {"v1", -1}}, {{"e0", "v0", "v1", 1}});
  auto sc = analyze_components(g);
  REQUIRE(sc.cls.classes.size() == 2);
  CHECK(sc.cls.classes[0].id == "v0");
  CHECK(sc.cls.classes[0].sigma == 1);
  CHECK(sc.cls.classes[1].sigma == -1);
  CHECK(!sc.orientation_flipped);
  CHECK(sc.has_parts);
  CHECK(sc.factor.bipartite);
  CHECK(sc.factor.e0 == std::vector<std::size_t>{0});
  CHECK(sc.side_of_class == std::vector<int>{1, -1});
  CHECK(sc.s == std::vector<int>{1, -1});
  CHECK(sc.parity_conflicts.empty());
}

TEST_CASE("same-sign neighbours merge into one class") {
  auto g = simple_graph({{"v0", 1}, {"v1", 2}}, {{"e0", "v0", "v1", 2}});
  auto sc = analyze_components(g);
  REQUIRE(sc.cls.classes.size() == 1);
  CHECK(sc.cls.classes[0].members == std::vector<std::size_t>{0, 1});
  CHECK(sc.factor.e0.empty());
  CHECK(sc.factor.edge_internal == std::vector<char>{1});
  CHECK(sc.s == std::vector<int>{1, 1});
}

TEST_CASE("all-negative charges flip the ambient orientation") {
  auto g = simple_graph({{"v0", -1}, {"v1", -1}}, {{"e0", "v0", "v1", 1}});
  auto sc = analyze_components(g);
  CHECK(sc.orientation_flipped);
  CHECK(sc.effective_charge[0] == 1);
  CHECK(sc.effective_charge[1] == 1);
  CHECK(sc.s == std::vector<int>{1, 1});

  // Completed data identical to the unnegated instance.
  auto g2 = simple_graph({{"v0", 1}, {"v1", 1}}, {{"e0", "v0", "v1", 1}});
  auto sc2 = analyze_components(g2);
  CHECK(!sc2.orientation_flipped);
  CHECK(sc.s == sc2.s);
  CHECK(sc.effective_charge == sc2.effective_charge);
  CHECK(sc.side_of_class == sc2.side_of_class);
}

TEST_CASE("a signed class forced onto the wrong side is a parity conflict") {
  // a(-1) -- z(0) -- b(+1): the flip anchored at class 'a' makes it positive
  // and puts it on the + side; 'b' then lands on + as well with an effective
  // charge of -1.
  auto g = simple_graph({{"a", -1}, {"z", 0}, {"b", 1}},
                        {{"e0", "a", "z", 1}, {"e1", "z", "b", 1}});
  auto sc = analyze_components(g);
  CHECK(sc.orientation_flipped);
  CHECK(sc.has_parts);
  REQUIRE(sc.cls.classes.size() == 3);
  CHECK(sc.cls.classes[0].id == "a");
  CHECK(sc.side_of_class == std::vector<int>{1, 1, -1});  // classes a, b, z
  CHECK(sc.s == std::vector<int>{1, -1, 1});              // vertices a, z, b
  CHECK(sc.parity_conflicts == std::vector<std::string>{"b"});
}

TEST_CASE("non-bipartite factor graph leaves s unassigned") {
  GraphManifoldData g = simple_graph(
      {{"v0", 1}, {"v1", -1}, {"v2", 0}},
      {{"e0", "v0", "v1", 1}, {"e1", "v0", "v2", 1}, {"e2", "v1", "v2", 1}});
  auto sc = analyze_components(g);
  CHECK(sc.cls.classes.size() == 3);
  CHECK(!sc.factor.bipartite);
  CHECK(!sc.has_parts);
  CHECK(sc.s == std::vector<int>{0, 0, 0});
  CHECK(!sc.orientation_flipped);
  CHECK(sc.parity_conflicts.empty());
}

TEST_CASE("all-zero charges leave s unassigned") {
  auto g = simple_graph({{"v0", 0}, {"v1", 0}}, {{"e0", "v0", "v1", 1}});
  auto sc = analyze_components(g);
  CHECK(sc.factor.bipartite);
  CHECK(!sc.has_parts);
  CHECK(sc.s == std::vector<int>{0, 0});
  CHECK(!sc.orientation_flipped);
}

TEST_CASE("self-loops are always internal") {
  auto g = simple_graph({{"v0", 0}}, {{"e0", "v0", "v0", 1}});
  auto sc = analyze_components(g);
  CHECK(sc.factor.e0.empty());
  CHECK(sc.factor.edge_internal == std::vector<char>{1});
  CHECK(sc.factor.bipartite);  // single node, no factor edges
  CHECK(!sc.has_parts);        // charge zero
}

TEST_CASE("zero-charge vertices stay singletons even when adjacent") {
  auto g = simple_graph({{"v0", 0}, {"v1", 0}, {"v2", 2}},
                        {{"e0", "v0", "v1", 1}, {"e1", "v1", "v2", 1}});
  auto sc = analyze_components(g);
  CHECK(sc.cls.classes.size() == 3);
  CHECK(sc.factor.e0.size() == 2);
}
