#pragma once

#include <json.hpp>

#include "gm/rational.hpp"

namespace gm {

// Rationals serialize as JSON integers when they are integral and fit in 64
// bits, and as canonical "p/q" strings otherwise — exactness without floats.
nlohmann::ordered_json rational_to_json(const Rational& q);

nlohmann::ordered_json integer_to_json(const mpz_class& z);

}  // namespace gm
