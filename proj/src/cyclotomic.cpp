#include "qcomb/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace qcomb {

namespace {

// ---- dense polynomial helpers (coefficient vectors, constant term first) ----

void poly_trim(std::vector<Rational>& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

bool poly_is_zero(const std::vector<Rational>& p) {
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

// in-place remainder of p by the monic integer polynomial d
void poly_mod(std::vector<Rational>& p, const std::vector<Integer>& d) {
  const std::size_t dd = d.size() - 1;  // degree of divisor
  while (p.size() > dd) {
    Rational lead = p.back();
    std::size_t shift = p.size() - 1 - dd;
    if (!lead.is_zero()) {
      for (std::size_t i = 0; i <= dd; ++i)
        p[shift + i] -= lead * Rational(d[i]);
    }
    p.pop_back();
  }
  p.resize(dd, Rational(0));
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

// quotient/remainder of a by b over Q, b non-zero
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
    std::vector<Rational> a, const std::vector<Rational>& b) {
  std::vector<Rational> bt = b;
  poly_trim(bt);
  poly_trim(a);
  const Rational lead = bt.back();
  std::vector<Rational> q(a.size() >= bt.size() ? a.size() - bt.size() + 1 : 1,
                          Rational(0));
  while (a.size() >= bt.size() && !poly_is_zero(a)) {
    Rational f = a.back() / lead;
    std::size_t shift = a.size() - bt.size();
    q[shift] = f;
    for (std::size_t i = 0; i < bt.size(); ++i)
      a[shift + i] -= f * bt[i];
    a.pop_back();
    poly_trim(a);
  }
  if (a.empty()) a.assign(1, Rational(0));
  return {q, a};
}

// extended gcd over Q[x]: returns (g, s) with s*a + t*b = g (t not needed)
std::pair<std::vector<Rational>, std::vector<Rational>> poly_ext_gcd(
    std::vector<Rational> a, std::vector<Rational> b) {
  std::vector<Rational> s0{Rational(1)}, s1{Rational(0)};
  poly_trim(a);
  poly_trim(b);
  while (!poly_is_zero(b)) {
    auto [q, r] = poly_divmod(a, b);
    // s_next = s0 - q*s1
    std::vector<Rational> qs = poly_mul(q, s1);
    std::vector<Rational> s2(std::max(s0.size(), qs.size()), Rational(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    poly_trim(s2);
    a = b;
    b = r;
    poly_trim(b);
    s0 = s1;
    s1 = s2;
  }
  return {a, s0};
}

// exact division of integer polynomials, remainder known to vanish
std::vector<Integer> ipoly_divexact(const std::vector<Integer>& a,
                                    const std::vector<Integer>& b) {
  std::vector<Integer> rem = a;
  std::vector<Integer> q(a.size() - b.size() + 1, Integer(0));
  for (long i = static_cast<long>(a.size()) - static_cast<long>(b.size()); i >= 0; --i) {
    Integer f = rem[i + b.size() - 1] / b.back();
    q[i] = f;
    for (std::size_t j = 0; j < b.size(); ++j)
      rem[i + j] -= f * b[j];
  }
  return q;
}

}  // namespace

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int m) {
  if (m < 1) throw DomainError("cyclotomic polynomial needs m >= 1");
  static std::mutex mu;
  static std::unordered_map<int, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, by recursion on divisors.
  std::function<const std::vector<Integer>&(int)> get = [&](int k) -> const std::vector<Integer>& {
    auto found = cache.find(k);
    if (found != cache.end()) return found->second;
    std::vector<Integer> num(k + 1, Integer(0));
    num[0] = -1;
    num[k] = 1;
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      num = ipoly_divexact(num, get(d));
    }
    return cache.emplace(k, std::move(num)).first->second;
  };
  return get(m);
}

Cyclotomic Cyclotomic::from_rational(const Rational& r, int conductor) {
  if (conductor < 1) throw DomainError("conductor must be >= 1");
  std::vector<Rational> c(euler_phi(conductor), Rational(0));
  c[0] = r;
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::make(int conductor, const std::map<long, Rational>& power_coeffs) {
  if (conductor < 1) throw DomainError("conductor must be >= 1");
  std::vector<Rational> poly(conductor, Rational(0));
  for (const auto& [k, c] : power_coeffs) {
    long e = ((k % conductor) + conductor) % conductor;
    poly[e] += c;
  }
  poly_mod(poly, cyclotomic_polynomial(conductor));
  return Cyclotomic(conductor, std::move(poly));
}

Cyclotomic Cyclotomic::root_of_unity(int m, long k) {
  return make(m, {{k, Rational(1)}});
}

bool Cyclotomic::is_zero() const {
  return poly_is_zero(coeffs_);
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

std::optional<Rational> Cyclotomic::rational_part() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lift(int new_conductor) const {
  if (new_conductor % conductor_ != 0)
    throw ConductorMismatchError("lift target must be a multiple of the conductor");
  if (new_conductor == conductor_) return *this;
  long stride = new_conductor / conductor_;
  std::map<long, Rational> powers;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) powers[static_cast<long>(k) * stride] = coeffs_[k];
  return make(new_conductor, powers);
}

Cyclotomic Cyclotomic::conjugate() const {
  std::map<long, Rational> powers;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero())
      powers[(conductor_ - static_cast<long>(k)) % conductor_] = coeffs_[k];
  return make(conductor_, powers);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const double step = 2.0 * std::numbers::pi / conductor_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    acc += coeffs_[k].to_double() *
           std::complex<double>(std::cos(step * k), std::sin(step * k));
  }
  return acc;
}

namespace {

// aligns two operands onto a common conductor, lifting rational constants
std::pair<Cyclotomic, Cyclotomic> align(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  if (a.is_rational()) return {Cyclotomic::from_rational(*a.rational_part(), b.conductor()), b};
  if (b.is_rational()) return {a, Cyclotomic::from_rational(*b.rational_part(), a.conductor())};
  throw ConductorMismatchError("conductor mismatch: " + std::to_string(a.conductor()) +
                               " vs " + std::to_string(b.conductor()));
}

}  // namespace

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return Cyclotomic(conductor_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  auto [x, y] = align(a, b);
  std::vector<Rational> c = x.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs_[i];
  return Cyclotomic(x.conductor_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  auto [x, y] = align(a, b);
  std::vector<Rational> prod = poly_mul(x.coeffs_, y.coeffs_);
  poly_mod(prod, cyclotomic_polynomial(x.conductor_));
  return Cyclotomic(x.conductor_, std::move(prod));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  auto [x, y] = align(a, b);
  if (y.is_zero()) throw DivisionByZeroError("cyclotomic division by zero");
  // invert y modulo Phi_m via the extended Euclidean algorithm; the gcd is a
  // non-zero constant because Phi_m is irreducible over Q
  std::vector<Rational> phi;
  for (const auto& c : cyclotomic_polynomial(y.conductor_)) phi.emplace_back(c);
  auto [g, s] = poly_ext_gcd(y.coeffs_, phi);
  Rational g0 = g[0];
  std::vector<Rational> inv = s;
  for (auto& c : inv) c /= g0;
  std::vector<Rational> prod = poly_mul(x.coeffs_, inv);
  poly_mod(prod, cyclotomic_polynomial(x.conductor_));
  return Cyclotomic(x.conductor_, std::move(prod));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  // constants compare equal across conductors
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  return false;
}

std::string Cyclotomic::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) out << " + ";
    out << coeffs_[k].str();
    if (k > 0) out << "*z^" << k;
    first = false;
  }
  if (first) out << "0";
  out << " (mod " << conductor_ << ")";
  return out.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  auto mod_pos = text.rfind("(mod ");
  auto close = text.rfind(')');
  if (mod_pos == std::string::npos || close == std::string::npos || close < mod_pos)
    throw ParseError("cyclotomic literal missing conductor: " + text);
  int m = 0;
  try {
    m = std::stoi(text.substr(mod_pos + 5, close - mod_pos - 5));
  } catch (const std::exception&) {
    throw ParseError("bad conductor in: " + text);
  }
  if (m < 1) throw ParseError("bad conductor in: " + text);

  std::string body = text.substr(0, mod_pos);
  std::map<long, Rational> powers;
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto next = body.find(" + ", pos);
    std::string term = body.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? body.size() : next + 3;
    // trim
    auto b = term.find_first_not_of(" \t");
    auto e = term.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    term = term.substr(b, e - b + 1);
    long power = 0;
    std::string coef = term;
    auto star = term.find("*z^");
    if (star != std::string::npos) {
      coef = term.substr(0, star);
      try {
        power = std::stol(term.substr(star + 3));
      } catch (const std::exception&) {
        throw ParseError("bad power in term: " + term);
      }
    }
    powers[power] += Rational::parse(coef);
  }
  return make(m, powers);
}

}  // namespace qcomb
