#include "gm/rational.hpp"

#include <cctype>

namespace gm {

namespace {

// Strict integer token: optional sign, then digits only. GMP's own string
// parser skips interior whitespace, which is too lenient for manifest data.
bool valid_int_token(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_int_token(const std::string& s) {
  return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("BAD_RATIONAL", "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num =
      slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (!valid_int_token(num) || !valid_int_token(den)) {
    throw Error("BAD_RATIONAL", "not a rational: '" + text + "'");
  }
  const mpz_class d = parse_int_token(den);
  if (d == 0) {
    throw Error("BAD_RATIONAL", "zero denominator in '" + text + "'");
  }
  return make_rational(parse_int_token(num), d);
}

std::string format_rational(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

int sign_of(const Rational& q) { return sgn(q); }

mpz_class lcm_of_denominators(const std::vector<Rational>& qs) {
  mpz_class n = 1;
  for (const auto& q : qs) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), n.get_mpz_t(), q.get_den().get_mpz_t());
    n = l;
  }
  return n;
}

}  // namespace gm
