#include "gm/graph.hpp"

#include <algorithm>
#include <set>

namespace gm {

std::optional<std::size_t> GraphManifoldData::vertex_index(
    const VertexId& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> GraphManifoldData::edge_index(
    const EdgeId& id) const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].id == id) return i;
  }
  return std::nullopt;
}

ValidationResult validate(const GraphManifoldData& data) {
  ValidationResult r;
  if (data.vertices.empty()) {
    r.violations.push_back({"EMPTY_GRAPH", "", "no vertices"});
    return r;
  }

  std::set<VertexId> vids;
  for (const auto& v : data.vertices) {
    if (!vids.insert(v.id).second) {
      r.violations.push_back(
          {"DUPLICATE_ID", v.id, "duplicate vertex id '" + v.id + "'"});
    }
  }
  std::set<EdgeId> eids;
  for (const auto& e : data.edges) {
    if (!eids.insert(e.id).second) {
      r.violations.push_back(
          {"DUPLICATE_ID", e.id, "duplicate edge id '" + e.id + "'"});
    }
    for (const auto& end : e.ends) {
      if (vids.find(end) == vids.end()) {
        r.violations.push_back({"UNKNOWN_VERTEX", e.id,
                                "edge '" + e.id + "' references unknown vertex '" +
                                    end + "'"});
      }
    }
    if (e.b < 1) {
      r.violations.push_back(
          {"NON_POSITIVE_B", e.id,
           "edge '" + e.id + "' has b = " + std::to_string(e.b) + " (need >= 1)"});
    }
    if (e.bw_sign != 1 && e.bw_sign != -1) {
      r.violations.push_back({"BAD_SIGN", e.id,
                              "edge '" + e.id + "' has bw_sign = " +
                                  std::to_string(e.bw_sign) + " (need -1 or +1)"});
    }
  }

  // Connectivity over edges whose endpoints resolved.
  std::vector<std::vector<std::size_t>> adj(data.vertices.size());
  for (const auto& e : data.edges) {
    const auto a = data.vertex_index(e.ends[0]);
    const auto b = data.vertex_index(e.ends[1]);
    if (!a || !b) continue;
    adj[*a].push_back(*b);
    adj[*b].push_back(*a);
  }
  std::vector<char> seen(data.vertices.size(), 0);
  std::vector<std::size_t> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) {
      r.violations.push_back({"DISCONNECTED_GRAPH", data.vertices[i].id,
                              "vertex '" + data.vertices[i].id +
                                  "' is not reachable from '" +
                                  data.vertices[0].id + "'"});
      break;  // one witness suffices
    }
  }
  return r;
}

void validate_or_throw(const GraphManifoldData& data) {
  const auto r = validate(data);
  if (!r.ok()) {
    throw Error(r.violations.front().code, r.violations.front().message);
  }
}

std::vector<OrientedEdge> oriented_star(const GraphManifoldData& data,
                                        std::size_t v) {
  std::vector<OrientedEdge> star;
  for (std::size_t ei = 0; ei < data.edges.size(); ++ei) {
    const auto& e = data.edges[ei];
    const std::size_t a = *data.vertex_index(e.ends[0]);
    const std::size_t b = *data.vertex_index(e.ends[1]);
    if (a == v) star.push_back({ei, 0, a, b});
    if (b == v) star.push_back({ei, 1, b, a});
  }
  return star;
}

std::vector<OrientedEdge> all_oriented_edges(const GraphManifoldData& data) {
  std::vector<OrientedEdge> out;
  for (std::size_t ei = 0; ei < data.edges.size(); ++ei) {
    const auto& e = data.edges[ei];
    const std::size_t a = *data.vertex_index(e.ends[0]);
    const std::size_t b = *data.vertex_index(e.ends[1]);
    out.push_back({ei, 0, a, b});
    out.push_back({ei, 1, b, a});
  }
  return out;
}

void negate_charges(GraphManifoldData& data) {
  for (auto& v : data.vertices) v.charge = -v.charge;
}

GraphManifoldData renamed(const GraphManifoldData& data,
                          const std::map<VertexId, VertexId>& vmap,
                          const std::map<EdgeId, EdgeId>& emap) {
  auto map_v = [&](const VertexId& id) {
    auto it = vmap.find(id);
    return it == vmap.end() ? id : it->second;
  };
  GraphManifoldData out = data;
  for (auto& v : out.vertices) v.id = map_v(v.id);
  for (auto& e : out.edges) {
    auto it = emap.find(e.id);
    if (it != emap.end()) e.id = it->second;
    e.ends[0] = map_v(e.ends[0]);
    e.ends[1] = map_v(e.ends[1]);
  }
  return out;
}

GraphManifoldData reordered(const GraphManifoldData& data,
                            const std::vector<std::size_t>& vertex_order,
                            const std::vector<std::size_t>& edge_order) {
  GraphManifoldData out;
  out.vertices.reserve(data.vertices.size());
  out.edges.reserve(data.edges.size());
  for (std::size_t i : vertex_order) out.vertices.push_back(data.vertices[i]);
  for (std::size_t i : edge_order) out.edges.push_back(data.edges[i]);
  return out;
}

GraphManifoldData ingest_gluing(const GluingForm& form) {
  GraphManifoldData out;
  out.vertices.reserve(form.vertex_ids.size());
  for (const auto& id : form.vertex_ids) out.vertices.push_back({id, Rational(0)});

  for (const auto& g : form.edges) {
    const long long det =
        g.m[0][0] * g.m[1][1] - g.m[0][1] * g.m[1][0];
    if (det != -1) {
      throw Error("BAD_DETERMINANT",
                  "edge '" + g.id + "': gluing determinant is " +
                      std::to_string(det) + ", expected -1");
    }
    const long long bw = g.m[0][1];
    if (bw == 0) {
      throw Error("FIBER_MATCH",
                  "edge '" + g.id +
                      "': fibre classes match across the torus (m01 = 0)");
    }

    Edge e;
    e.id = g.id;
    e.ends[0] = g.ends[0];
    e.ends[1] = g.ends[1];
    e.b = static_cast<long>(bw < 0 ? -bw : bw);
    e.bw_sign = bw < 0 ? -1 : +1;
    out.edges.push_back(e);

    // Fibre coefficient of f_{-w} over b on each side; the far side comes
    // from the inverse matrix (det -1 makes it [[-d, b], [c, -a]]).
    auto add_charge = [&](const VertexId& vid, const Rational& delta) {
      const auto vi = out.vertex_index(vid);
      if (!vi) {
        throw Error("UNKNOWN_VERTEX",
                    "edge '" + g.id + "' references unknown vertex '" + vid + "'");
      }
      out.vertices[*vi].charge += delta;
    };
    add_charge(g.ends[0], make_rational(static_cast<long>(g.m[0][0]),
                                        static_cast<long>(bw)));
    add_charge(g.ends[1], make_rational(static_cast<long>(-g.m[1][1]),
                                        static_cast<long>(bw)));
  }
  return out;
}

}  // namespace gm
