#include "gm/generate.hpp"

#include <string>

namespace gm {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection keeps the draw exactly uniform.
  std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

long long SplitMix64::between(long long lo, long long hi) {
  return lo + static_cast<long long>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

void check_shape(const GenerateOptions& o) {
  if (o.vertices == 0 || o.edges + 1 < o.vertices)
    throw Error("INFEASIBLE_SHAPE",
                "need at least 1 vertex and vertices-1 edges to connect " +
                    std::to_string(o.vertices) + " vertices with " +
                    std::to_string(o.edges) + " edges");
  if (o.charge_lo > o.charge_hi || o.b_lo > o.b_hi || o.b_lo < 1)
    throw Error("INFEASIBLE_SHAPE", "empty charge or b range");
}

// Tree first (vertex i hangs off a uniform earlier vertex), then uniform
// extra endpoints; identical for the reduced and gluing generators so the
// two forms of one seed describe the same topology.
std::vector<std::pair<std::size_t, std::size_t>> random_topology(
    const GenerateOptions& o, SplitMix64& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  ends.reserve(o.edges);
  for (std::size_t i = 1; i < o.vertices; ++i)
    ends.emplace_back(static_cast<std::size_t>(rng.below(i)), i);
  while (ends.size() < o.edges) {
    std::size_t a = static_cast<std::size_t>(rng.below(o.vertices));
    std::size_t b = static_cast<std::size_t>(rng.below(o.vertices));
    ends.emplace_back(a, b);
  }
  return ends;
}

}  // namespace

GraphManifoldData generate_instance(const GenerateOptions& opts) {
  check_shape(opts);
  SplitMix64 rng{opts.seed};
  auto ends = random_topology(opts, rng);
  GraphManifoldData data;
  for (std::size_t i = 0; i < opts.vertices; ++i) {
    const long halves =
        static_cast<long>(rng.between(2 * opts.charge_lo, 2 * opts.charge_hi));
    Vertex v;
    v.id = "v" + std::to_string(i);
    v.charge = make_rational(halves, 2);
    data.vertices.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < ends.size(); ++i) {
    Edge e;
    e.id = "e" + std::to_string(i);
    e.ends[0] = data.vertices[ends[i].first].id;
    e.ends[1] = data.vertices[ends[i].second].id;
    e.b = rng.between(opts.b_lo, opts.b_hi);
    e.bw_sign = rng.below(2) == 0 ? 1 : -1;
    data.edges.push_back(std::move(e));
  }
  return data;
}

GluingForm generate_gluing_instance(const GenerateOptions& opts) {
  check_shape(opts);
  SplitMix64 rng{opts.seed};
  auto ends = random_topology(opts, rng);
  GluingForm form;
  for (std::size_t i = 0; i < opts.vertices; ++i)
    form.vertex_ids.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < ends.size(); ++i) {
    long long p, q, r;
    do {
      p = rng.between(-3, 3);
      q = rng.between(-3, 3);
      r = rng.between(-3, 3);
    } while (p * q == -1);
    GluingDatum g;
    g.id = "e" + std::to_string(i);
    g.ends[0] = form.vertex_ids[ends[i].first];
    g.ends[1] = form.vertex_ids[ends[i].second];
    g.m[0][0] = p + r * (1 + p * q);
    g.m[0][1] = 1 + p * q;
    g.m[1][0] = 1 + r * q;
    g.m[1][1] = q;
    form.edges.push_back(std::move(g));
  }
  return form;
}

}  // namespace gm
