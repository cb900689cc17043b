#include "qcomb/rational.hpp"

#include <cmath>
#include <cstddef>

namespace qcomb {

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    try {
      Integer num(s.substr(0, slash), 10);
      Integer den(s.substr(slash + 1), 10);
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational literal: " + s);
    }
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // decimal literal: digits.digits -> exact fraction over a power of ten
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw ParseError("bad rational literal: " + s);
    try {
      Integer num(digits, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational literal: " + s);
    }
  }
  try {
    return Rational(Integer(s, 10));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + s);
  }
}

std::string Rational::str() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

Rational rational_pow(const Rational& r, unsigned long e) {
  Rational acc(1);
  Rational base = r;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

Rational rational_abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

double log_integer(const Integer& n) {
  if (n <= 0) throw DomainError("log of non-positive integer");
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

}  // namespace qcomb
