#include "gm/json_util.hpp"

namespace gm {

nlohmann::ordered_json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) {
    return nlohmann::ordered_json(static_cast<std::int64_t>(z.get_si()));
  }
  return nlohmann::ordered_json(z.get_str());
}

nlohmann::ordered_json rational_to_json(const Rational& q) {
  if (is_integer(q)) return integer_to_json(q.get_num());
  return nlohmann::ordered_json(format_rational(q));
}

}  // namespace gm
