#pragma once

#include <iosfwd>

#include "gm/decision.hpp"

namespace gm {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // counts when passed, first failures otherwise
};

// Tallies from the exhaustive small-instance sweep (every connected
// multigraph with <= 3 vertices and <= 4 edges, b in {1,2}, integer charges
// in [-2,2]). One sweep feeds several independent assertions, so the counts
// are kept separate.
struct SuiteStats {
  std::size_t instances = 0;
  std::size_t npc_count = 0;
  std::size_t vf_count = 0;
  std::size_t implication_failures = 0;  // npc without fibering
  std::size_t negation_checked = 0;      // charge-negation matrix equality
  std::size_t negation_failures = 0;
  std::size_t perm_checked = 0;  // relabeling invariance runs
  std::size_t perm_failures = 0;
  std::size_t certs_checked = 0;  // every emitted certificate re-verified
  std::size_t cert_failures = 0;
  std::size_t strict_certs = 0;
  std::size_t weak_certs = 0;
  std::size_t pattern_failures = 0;   // weak gamma off the {+1,-1,0} layout
  std::size_t mandatory_cert = 0;     // instances owing a certificate
  std::size_t mandatory_missing = 0;  // ... that did not get one
  std::size_t quad_checked = 0;       // quadratic-identity evaluations
  std::size_t quad_failures = 0;
  std::size_t boundary_checked = 0;  // boundary classes built (identities
                                     // asserted inside)
  long long elapsed_ms = 0;
  std::vector<std::string> failures;  // first few offenders, serialized

  bool ok() const {
    return implication_failures == 0 && negation_failures == 0 &&
           perm_failures == 0 && cert_failures == 0 &&
           pattern_failures == 0 && mandatory_missing == 0 &&
           quad_failures == 0;
  }
};

// The sweep. permutations counts relabeling checks per instance; 0 skips
// them. Progress lines go to *progress when non-null.
SuiteStats run_exhaustive_suite(int permutations, std::ostream* progress);

CheckResult check_worked_examples();
CheckResult check_inertia_oracle(std::size_t cases);
CheckResult check_basis_change_invariance(std::size_t cases);
CheckResult check_boundary_orientations();
CheckResult check_ingest_consistency(std::size_t cases);

// Bundled run. breadth 0 = worked examples only; breadth b >= 1 runs
// everything with randomized counts scaled by b (b = 1 is the pinned
// default: 200 oracle matrices, 100 basis changes, 100 ingest pairs,
// 10 permutations per suite instance).
std::vector<CheckResult> run_selftest(int breadth, std::ostream* progress);

}  // namespace gm
