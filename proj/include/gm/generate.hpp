#pragma once

#include <cstdint>

#include "gm/graph.hpp"

namespace gm {

// splitmix64: tiny deterministic generator, stable across platforms, so a
// seed in a test or a bug report reproduces the same instance everywhere.
struct SplitMix64 {
  std::uint64_t state = 0;
  std::uint64_t next();
  // Uniform in [0, bound), bound > 0, via rejection.
  std::uint64_t below(std::uint64_t bound);
  // Uniform integer in [lo, hi] inclusive.
  long long between(long long lo, long long hi);
};

struct GenerateOptions {
  std::size_t vertices = 3;
  std::size_t edges = 3;
  std::uint64_t seed = 0;
  // Charges are drawn from the half-integer grid lo, lo+1/2, ..., hi.
  long long charge_lo = -2;
  long long charge_hi = 2;
  long long b_lo = 1;
  long long b_hi = 3;
};

// Connected random instance: vertices v0..v{n-1}, edges e0..e{m-1}; the first
// n-1 edges form a random recursive tree, the rest join uniform endpoints
// (self-loops and parallel edges allowed). Requires m >= n-1 >= 0, n >= 1,
// nonempty ranges, b_lo >= 1; INFEASIBLE_SHAPE otherwise. Deterministic in
// the options.
GraphManifoldData generate_instance(const GenerateOptions& opts);

// Same topology, but edges carry 2x2 integer gluings J(p,q,r) =
// [[p + r(1+pq), 1+pq], [1+rq, q]] with p,q,r in [-3,3] and pq != -1; every
// such matrix has determinant -1 and nonzero upper-right entry, so the
// derived data always exists. Charge/b ranges in opts are ignored.
GluingForm generate_gluing_instance(const GenerateOptions& opts);

}  // namespace gm
