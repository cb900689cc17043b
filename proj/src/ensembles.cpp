#include "qcomb/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace qcomb {

long MultiplicityVector::total() const {
  long t = 0;
  for (long c : counts) t += c;
  return t;
}

WeightVector::WeightVector(std::vector<Rational> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw DomainError("weight vector must be non-empty");
  Rational sum(0);
  for (const auto& w : w_) {
    if (w.sign() < 0) throw DomainError("weights must be non-negative");
    sum += w;
  }
  if (sum != Rational(1)) throw DomainError("weights must sum to 1");
}

WeightVector WeightVector::uniform(int m) {
  if (m < 1) throw DomainError("need at least one symbol");
  return WeightVector(std::vector<Rational>(m, Rational(1, static_cast<long>(m))));
}

Integer macrostate_count(int m, long t) {
  if (m < 1) throw DomainError("alphabet size must be >= 1");
  if (t < 0) throw DomainError("sequence length must be >= 0");
  return binomial(t + m - 1, m - 1);
}

Integer macrostate_size(const MultiplicityVector& k) {
  long t = 0;
  for (long c : k.counts) {
    if (c < 0) throw DomainError("multiplicities must be non-negative");
    t += c;
  }
  Integer size = factorial(t);
  for (long c : k.counts) size /= factorial(c);
  return size;
}

Rational multinomial_probability(const MultiplicityVector& k, const WeightVector& alpha) {
  if (static_cast<int>(k.counts.size()) != alpha.size())
    throw DimensionMismatchError("multiplicity/weight dimension mismatch");
  Rational p(macrostate_size(k));
  for (std::size_t i = 0; i < k.counts.size(); ++i)
    p *= rational_pow(alpha[i], static_cast<unsigned long>(k.counts[i]));
  return p;
}

double shannon_entropy(std::span<const double> freqs) {
  double s = 0.0;
  for (double f : freqs) {
    if (f < 0.0) throw DomainError("frequencies must be non-negative");
    if (f > 0.0) s -= f * std::log(f);
  }
  return s;
}

double stirling_ln_factorial(long n, StirlingTerms terms) {
  if (n < 1) throw DomainError("Stirling expansion needs n >= 1");
  const double x = static_cast<double>(n);
  double s = x * std::log(x) - x;
  if (terms == StirlingTerms::kSuperlinear) return s;
  s += 0.5 * std::log(2.0 * std::numbers::pi * x);
  if (terms == StirlingTerms::kLog) return s;
  s += 1.0 / (12.0 * x);
  if (terms == StirlingTerms::kInv12) return s;
  s -= 1.0 / (360.0 * x * x * x);
  return s;
}

double ln_factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  if (n <= 1) return 0.0;
  return log_integer(factorial(n));
}

double binomial_entropy_exact(long k1, long t, const Rational& a1, const Rational& a2) {
  if (k1 < 0 || k1 > t) throw DomainError("k1 out of range");
  if (a1.sign() <= 0 || a2.sign() <= 0)
    throw DomainError("weights must be positive");
  return ln_factorial(t) - ln_factorial(k1) - ln_factorial(t - k1) +
         static_cast<double>(k1) * std::log(a1.to_double()) +
         static_cast<double>(t - k1) * std::log(a2.to_double());
}

double binomial_entropy_star(double k1, long t, double a1) {
  if (t < 1) throw DomainError("need t >= 1");
  if (!(a1 > 0.0 && a1 < 1.0)) throw DomainError("need 0 < a1 < 1");
  const double a2 = 1.0 - a1;
  const double var = static_cast<double>(t) * a1 * a2;
  const double dev = k1 - a1 * static_cast<double>(t);
  return 0.5 * std::log(1.0 / (2.0 * std::numbers::pi * var)) - dev * dev / (2.0 * var);
}

EnergyPartition microcanonical(std::span<const double> energies) {
  std::map<double, long> groups;
  for (double e : energies) ++groups[e];
  EnergyPartition out;
  for (const auto& [level, size] : groups) {
    out.levels.push_back(level);
    out.sizes.push_back(size);
    out.entropies.push_back(std::log(static_cast<double>(size)));
  }
  return out;
}

CanonicalEnsemble canonical_weights(const EnergyPartition& partition, double temperature) {
  if (!(temperature > 0.0)) throw DomainError("temperature must be positive");
  if (partition.levels.size() != partition.sizes.size())
    throw DimensionMismatchError("levels/sizes length mismatch");
  CanonicalEnsemble out;
  out.partition_function = 0.0;
  for (std::size_t k = 0; k < partition.levels.size(); ++k)
    out.partition_function += static_cast<double>(partition.sizes[k]) *
                              std::exp(-partition.levels[k] / temperature);
  for (std::size_t k = 0; k < partition.levels.size(); ++k) {
    double w = std::exp(-partition.levels[k] / temperature) / out.partition_function;
    out.microstate_weights.push_back(w);
    out.level_probabilities.push_back(static_cast<double>(partition.sizes[k]) * w);
  }
  return out;
}

namespace {

void enumerate_rec(int m, long remaining, std::vector<long>& prefix,
                   std::vector<MultiplicityVector>& out) {
  if (static_cast<int>(prefix.size()) == m - 1) {
    prefix.push_back(remaining);
    out.push_back(MultiplicityVector{prefix});
    prefix.pop_back();
    return;
  }
  for (long c = 0; c <= remaining; ++c) {
    prefix.push_back(c);
    enumerate_rec(m, remaining - c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiplicityVector> enumerate_macrostates(int m, long t) {
  if (m < 1 || t < 0) throw DomainError("bad macrostate enumeration parameters");
  std::vector<MultiplicityVector> out;
  std::vector<long> prefix;
  enumerate_rec(m, t, prefix, out);
  return out;
}

}  // namespace qcomb
