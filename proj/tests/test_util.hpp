#pragma once

#include <string>

#include "gm/graph.hpp"

// Runs f and returns the stable error code it threw, or "" when it did not
// throw. Keeps code assertions one-liners.
template <typename F>
std::string thrown_code(F&& f) {
  try {
    f();
  } catch (const gm::Error& e) {
    return e.code();
  }
  return "";
}

inline gm::GraphManifoldData simple_graph(
    std::initializer_list<std::pair<const char*, long>> vertices,
    std::initializer_list<std::tuple<const char*, const char*, const char*, long>>
        edges) {
  gm::GraphManifoldData g;
  for (const auto& [id, k] : vertices)
    g.vertices.push_back({id, gm::Rational(k)});
  for (const auto& [id, a, b, bval] : edges) {
    gm::Edge e;
    e.id = id;
    e.ends[0] = a;
    e.ends[1] = b;
    e.b = bval;
    g.edges.push_back(e);
  }
  return g;
}
