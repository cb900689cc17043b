#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcomb/rational.hpp"

namespace qcomb {

/**
 * Exact element of the cyclotomic field Q_m.
 *
 * Values are stored in the power basis 1, z, ..., z^(phi(m)-1) of a primitive
 * m-th root of unity z, reduced modulo the m-th cyclotomic polynomial. The
 * reduced coefficient vector is a unique normal form: two elements are equal
 * iff their conductor and coefficients are equal. All arithmetic is exact;
 * the complex embedding z -> exp(2*pi*i/m) is offered only as a diagnostic.
 *
 * Mixed-conductor arithmetic is rejected unless one operand is rational (a
 * constant), which embeds into any Q_m. Use lift() for an explicit move into
 * a larger field Q_m' with m | m'.
 */
class Cyclotomic {
 public:
  /// Zero of Q_1.
  Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}

  /// A rational constant as an element of Q_m.
  static Cyclotomic from_rational(const Rational& r, int conductor = 1);

  /// Canonical form of sum c_k z^k. Exponents are reduced mod m.
  static Cyclotomic make(int conductor, const std::map<long, Rational>& power_coeffs);

  /// z_m^k.
  static Cyclotomic root_of_unity(int m, long k);

  int conductor() const { return conductor_; }

  /// Canonical coefficients, length phi(m).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  /// Rational value if the element lies in the prime subfield.
  std::optional<Rational> rational_part() const;

  /// Explicit embedding Q_m -> Q_m' for m | m'.
  Cyclotomic lift(int new_conductor) const;

  /// Complex conjugation: z^k -> z^(m-k). An involutive field automorphism.
  Cyclotomic conjugate() const;

  /// Numeric embedding with z = exp(2*pi*i/m). Diagnostic only.
  std::complex<double> to_complex() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Textual form `c0 + c1*z^1 + ... (mod m)`; round-trips through parse().
  std::string str() const;
  static Cyclotomic parse(const std::string& text);

 private:
  Cyclotomic(int conductor, std::vector<Rational> reduced)
      : conductor_(conductor), coeffs_(std::move(reduced)) {}

  int conductor_;
  std::vector<Rational> coeffs_;
};

/// Coefficients of the m-th cyclotomic polynomial, constant term first,
/// monic. Results are cached per conductor; safe for concurrent use.
const std::vector<Integer>& cyclotomic_polynomial(int m);

/// Euler phi(m) = degree of the m-th cyclotomic polynomial.
int euler_phi(int m);

}  // namespace qcomb
