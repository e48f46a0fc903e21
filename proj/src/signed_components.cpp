#include "gm/signed_components.hpp"

#include <algorithm>
#include <numeric>

namespace gm {

namespace {

std::size_t uf_find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Classes compute_classes(const GraphManifoldData& data) {
  const std::size_t n = data.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);

  for (const auto& e : data.edges) {
    const std::size_t a = *data.vertex_index(e.ends[0]);
    const std::size_t b = *data.vertex_index(e.ends[1]);
    if (sign_of(data.vertices[a].charge) * sign_of(data.vertices[b].charge) >
        0) {
      parent[uf_find(parent, a)] = uf_find(parent, b);
    }
  }

  // Group members per root, name each class by its smallest member id.
  std::vector<std::vector<std::size_t>> buckets(n);
  for (std::size_t v = 0; v < n; ++v) buckets[uf_find(parent, v)].push_back(v);

  Classes out;
  out.class_of.assign(n, 0);
  for (auto& members : buckets) {
    if (members.empty()) continue;
    std::sort(members.begin(), members.end(),
              [&](std::size_t x, std::size_t y) {
                return data.vertices[x].id < data.vertices[y].id;
              });
    SignedClass c;
    c.id = data.vertices[members.front()].id;
    c.members = members;
    c.sigma = sign_of(data.vertices[members.front()].charge);
    out.classes.push_back(std::move(c));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const SignedClass& x, const SignedClass& y) { return x.id < y.id; });
  for (std::size_t ci = 0; ci < out.classes.size(); ++ci) {
    for (std::size_t v : out.classes[ci].members) out.class_of[v] = ci;
  }
  return out;
}

FactorGraph factor_graph(const GraphManifoldData& data, const Classes& cls) {
  FactorGraph out;
  out.edge_internal.assign(data.edges.size(), 0);
  for (std::size_t ei = 0; ei < data.edges.size(); ++ei) {
    const auto& e = data.edges[ei];
    const std::size_t a = cls.class_of[*data.vertex_index(e.ends[0])];
    const std::size_t b = cls.class_of[*data.vertex_index(e.ends[1])];
    if (a == b) {
      out.edge_internal[ei] = 1;
    } else {
      out.e0.push_back(ei);
      out.edges.push_back({ei, a, b});
    }
  }

  // Two-coloring by BFS from the smallest class id (classes are sorted, and
  // the factor graph of a connected input is connected, so one sweep covers
  // everything; isolated-classes case means no E0 edges at all).
  const std::size_t m = cls.classes.size();
  out.color_of_class.assign(m, 0);
  out.bipartite = true;
  std::vector<std::vector<std::size_t>> adj(m);
  for (const auto& fe : out.edges) {
    adj[fe.a].push_back(fe.b);
    adj[fe.b].push_back(fe.a);
  }
  for (std::size_t start = 0; start < m; ++start) {
    if (out.color_of_class[start] != 0) continue;
    out.color_of_class[start] = +1;
    std::vector<std::size_t> queue = {start};
    while (!queue.empty()) {
      const std::size_t u = queue.back();
      queue.pop_back();
      for (std::size_t v : adj[u]) {
        if (out.color_of_class[v] == 0) {
          out.color_of_class[v] = -out.color_of_class[u];
          queue.push_back(v);
        } else if (out.color_of_class[v] == out.color_of_class[u]) {
          out.bipartite = false;
        }
      }
    }
  }
  if (!out.bipartite) out.color_of_class.assign(m, 0);
  return out;
}

SignedComponents analyze_components(const GraphManifoldData& data) {
  SignedComponents sc;
  sc.cls = compute_classes(data);
  sc.factor = factor_graph(data, sc.cls);

  const std::size_t n = data.vertices.size();
  sc.effective_charge.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    sc.effective_charge[v] = data.vertices[v].charge;
  }
  sc.s.assign(n, 0);
  sc.side_of_class.assign(sc.cls.classes.size(), 0);

  // Anchor class: smallest id among classes with nonzero sign.
  std::size_t anchor = sc.cls.classes.size();
  for (std::size_t ci = 0; ci < sc.cls.classes.size(); ++ci) {
    if (sc.cls.classes[ci].sigma != 0) {
      anchor = ci;
      break;
    }
  }

  const bool all_zero = anchor == sc.cls.classes.size();
  if (all_zero || !sc.factor.bipartite) {
    return sc;  // s ≡ 0, parts absent; bipartite flag left as computed
  }

  if (sc.cls.classes[anchor].sigma < 0) {
    sc.orientation_flipped = true;
    for (auto& q : sc.effective_charge) q = -q;
    for (auto& c : sc.cls.classes) c.sigma = -c.sigma;
  }

  // P = the anchor's side of the (unique up to swap) 2-coloring.
  const int p_color = sc.factor.color_of_class[anchor];
  for (std::size_t ci = 0; ci < sc.cls.classes.size(); ++ci) {
    sc.side_of_class[ci] = sc.factor.color_of_class[ci] == p_color ? +1 : -1;
    if (sc.cls.classes[ci].sigma != 0 &&
        sc.cls.classes[ci].sigma != sc.side_of_class[ci]) {
      sc.parity_conflicts.push_back(sc.cls.classes[ci].id);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    sc.s[v] = sc.side_of_class[sc.cls.class_of[v]];
  }
  sc.has_parts = true;
  return sc;
}

}  // namespace gm
