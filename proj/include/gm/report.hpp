#pragma once

#include <cstdint>

#include "gm/decision.hpp"
#include "gm/json_util.hpp"

namespace gm {

// Deterministic JSON rendering of an analysis: same data, same bytes.
// Key order is fixed; maps over vertices/edges follow the input's own
// declaration order; rationals render via rational_to_json.
nlohmann::ordered_json report_to_json(const GraphManifoldData& data,
                                      const AnalysisReport& report);

// Output envelope around a report payload. input_digest is the SHA-256 of
// the raw input bytes, so reruns on identical files are recognizable;
// timing_ms is the only non-deterministic field.
nlohmann::ordered_json build_envelope(const std::string& input_bytes,
                                      nlohmann::ordered_json report,
                                      std::int64_t timing_ms);

// Short human-readable digest of the verdicts and certificate for terminal
// output alongside the JSON.
std::string summary_text(const GraphManifoldData& data,
                         const AnalysisReport& report);

}  // namespace gm
