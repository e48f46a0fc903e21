#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gm {

// Exact rational scalar used everywhere a verdict can depend on the value.
// mpq_class keeps canonical form (gcd(num,den) = 1, den > 0) through
// arithmetic; the helpers below keep it through construction and I/O.
using Rational = mpq_class;

// Error with a stable machine-readable code; the CLI surfaces the code in its
// JSON error objects and test assertions match on it.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Canonicalizing constructor; throws BAD_RATIONAL when den = 0.
Rational make_rational(const mpz_class& num, const mpz_class& den);

// Accepts "p", "p/q", with optional leading sign on either integer.
// Non-canonical input ("2/4", "1/-2") is canonicalized; q = 0 or any other
// text is BAD_RATIONAL.
Rational parse_rational(const std::string& text);

// Canonical text: bare integer when den = 1, else "p/q" with q > 0.
std::string format_rational(const Rational& q);

bool is_integer(const Rational& q);

int sign_of(const Rational& q);  // -1, 0, +1

// Least positive integer N such that N*q is an integer for every q given.
mpz_class lcm_of_denominators(const std::vector<Rational>& qs);

}  // namespace gm
