#pragma once

#include "gm/graph.hpp"

namespace gm {

// Vertices are equivalent when joined by a path of edges whose endpoint
// charges have strictly positive product; zero-charge vertices are always
// singletons. Within a class all charges share one sign.
struct SignedClass {
  std::string id;                    // lexicographically smallest member id
  std::vector<std::size_t> members;  // vertex indices, sorted by vertex id
  int sigma = 0;                     // common charge sign (-1, 0, +1)
};

struct Classes {
  std::vector<SignedClass> classes;   // sorted by class id
  std::vector<std::size_t> class_of;  // vertex index -> class index
};

Classes compute_classes(const GraphManifoldData& data);

// Factor graph: one node per class; its edges are exactly E0, the edges of
// the original graph whose endpoints lie in distinct classes. Internal edges
// (same class, which covers every self-loop) are dropped, so the factor graph
// never carries loops. Connectivity of the input makes it connected.
struct FactorEdge {
  std::size_t edge;  // original edge index
  std::size_t a, b;  // class indices, a != b
};

struct FactorGraph {
  std::vector<std::size_t> e0;          // original edge indices in E0
  std::vector<char> edge_internal;      // per original edge: not in E0
  std::vector<FactorEdge> edges;        // E0 with class endpoints
  bool bipartite = false;
  std::vector<int> color_of_class;      // ±1 two-coloring when bipartite
};

FactorGraph factor_graph(const GraphManifoldData& data, const Classes& cls);

// Completed sign data. The charges below are the *effective* ones: the input
// charges, globally negated when orientation_flipped is set. Downstream code
// (the charge matrix in particular) consumes effective charges and s.
//
// Construction: if every charge is zero or the factor graph is not bipartite,
// s ≡ 0 and no parts are assigned. Otherwise let C* be the lexicographically
// smallest class with sigma != 0; all charges are negated when sigma(C*) < 0
// (reversing the ambient orientation), C*'s side of the 2-coloring becomes P,
// and s(v) = +1 on P, -1 on N. Anchoring the flip and the polarity at the
// *same* class makes the completed data identical for k and -k, and C* itself
// is a positive-charge class in P. A signed class may still land on the side
// opposite its sign (reachable only through zero-charge classes); such
// parity conflicts are recorded, and the diagonal s(v)k_v they produce feeds
// the eigenvalue test as-is.
struct SignedComponents {
  Classes cls;
  FactorGraph factor;
  bool orientation_flipped = false;
  std::vector<Rational> effective_charge;  // per vertex
  std::vector<int> s;                      // per vertex: -1, 0, +1
  bool has_parts = false;
  std::vector<int> side_of_class;          // +1 = P, -1 = N, 0 = unassigned
  std::vector<std::string> parity_conflicts;  // ids of classes with sigma != side
};

SignedComponents analyze_components(const GraphManifoldData& data);

}  // namespace gm
