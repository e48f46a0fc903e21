#pragma once

#include <string>
#include <variant>

#include "gm/graph.hpp"

namespace gm {

// On-disk instance description, one of two forms:
//   reduced — vertices carry charges, edges carry the intersection number b
//             (plus bw_sign when -1);
//   gluing  — vertices are bare ids, edges carry the 2x2 integer change of
//             basis across the splitting torus, from which charges and b are
//             derived at load time.
// schema_version is optional on input (defaulting to 1, the only accepted
// value) and always written on output.
struct Manifest {
  int schema_version = 1;
  std::variant<GraphManifoldData, GluingForm> payload;
  bool is_gluing() const {
    return std::holds_alternative<GluingForm>(payload);
  }
};

// Strict parser: unknown keys, missing fields, non-integer b, float charges
// ("1.5"), and mixed forms are rejected (BAD_MANIFEST / BAD_RATIONAL).
Manifest parse_manifest(const std::string& text);

// read_file + parse_manifest (IO_ERROR on unreadable paths).
Manifest load_manifest(const std::string& path);

// Reduced data, running the gluing derivation when needed.
GraphManifoldData to_reduced(const Manifest& m);

// Canonical serialization: fixed key order, rationals as integers or "p/q"
// strings, bw_sign emitted only when -1, two-space indentation, trailing
// newline. parse_manifest(serialize_manifest(d)) reproduces d exactly.
std::string serialize_manifest(const GraphManifoldData& data);
std::string serialize_gluing(const GluingForm& form);

}  // namespace gm
