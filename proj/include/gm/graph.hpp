#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gm/rational.hpp"

namespace gm {

using VertexId = std::string;
using EdgeId = std::string;

struct Vertex {
  VertexId id;
  Rational charge;  // k_v
};

// One splitting torus of the decomposition. b is the (positive) intersection
// number of the two fibre classes meeting there; bw_sign remembers the sign
// the oriented pairing f_w ∧_w f_{-w} carries (+1 unless gluing data said
// otherwise). Only the boundary-class computation consumes bw_sign; verdicts
// depend on b alone.
struct Edge {
  EdgeId id;
  VertexId ends[2];
  long b = 1;        // >= 1
  int bw_sign = +1;  // -1 or +1
  bool is_loop() const { return ends[0] == ends[1]; }
};

struct GraphManifoldData {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  std::optional<std::size_t> vertex_index(const VertexId& id) const;
  std::optional<std::size_t> edge_index(const EdgeId& id) const;
};

// Oriented edge w with tail(w) -> head(w); side 0 runs ends[0] -> ends[1].
// A self-loop yields both sides, each with tail = head.
struct OrientedEdge {
  std::size_t edge;
  int side;  // 0 or 1
  std::size_t tail;
  std::size_t head;
};

struct Violation {
  std::string code;     // e.g. DUPLICATE_ID, DISCONNECTED_GRAPH
  std::string subject;  // offending id, or "" when not tied to one
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Structural checks: at least one vertex, unique ids, known endpoints,
// b >= 1, bw_sign in {-1,+1}, connectivity. Collects every violation rather
// than stopping at the first.
ValidationResult validate(const GraphManifoldData& data);

// Throws Error(code of the first violation) when validate() fails.
void validate_or_throw(const GraphManifoldData& data);

// Star of v as oriented edges with tail v, in edge-list order; a self-loop at
// v contributes both of its sides, so Σ_v |star(v)| = 2|E|.
std::vector<OrientedEdge> oriented_star(const GraphManifoldData& data,
                                        std::size_t v);

// Both sides of every edge, in edge-list order.
std::vector<OrientedEdge> all_oriented_edges(const GraphManifoldData& data);

// k_v -> -k_v for every vertex (the effect of reversing ambient orientation).
void negate_charges(GraphManifoldData& data);

// Test utilities: rename ids via the given bijections (ids absent from a map
// keep their name), and reorder the stored lists by the given permutations.
GraphManifoldData renamed(const GraphManifoldData& data,
                          const std::map<VertexId, VertexId>& vmap,
                          const std::map<EdgeId, EdgeId>& emap);
GraphManifoldData reordered(const GraphManifoldData& data,
                            const std::vector<std::size_t>& vertex_order,
                            const std::vector<std::size_t>& edge_order);

// ---------------------------------------------------------------------------
// Gluing-form ingestion

// Change of basis across a splitting torus, written in the fibre/section
// basis (f_w, s_w) of the side whose block is ends[0]:
//
//   f_{-w} = m[0][0]·f_w + m[0][1]·s_w
//   s_{-w} = m[1][0]·f_w + m[1][1]·s_w,   det m = -1,  m[0][1] != 0.
//
// m[0][1] = 0 would mean the fibres match up across the torus, which the
// decomposition forbids (FIBER_MATCH).
struct GluingDatum {
  EdgeId id;
  VertexId ends[2];
  long long m[2][2] = {{0, 0}, {0, 0}};
};

struct GluingForm {
  std::vector<VertexId> vertex_ids;
  std::vector<GluingDatum> edges;
};

// Derives the reduced data. Per edge: b_e = |m01|, bw_sign = sgn(m01).
// Charges accumulate the fibre coefficients of both orientations:
//   k_{ends[0]} += m00/m01        (f_{-w} = m00 f_w + m01 s_w)
//   k_{ends[1]} += -m11/m01       (inverting: f_w = -m11 f_{-w} + m01 s_{-w})
// and a self-loop adds both terms at its single vertex. The formula presumes
// the section classes of each block sum to zero in the block's homology; see
// the basis-change notes in the tests. Throws FIBER_MATCH / BAD_DETERMINANT.
GraphManifoldData ingest_gluing(const GluingForm& form);

}  // namespace gm
