#pragma once

#include <span>
#include <string>
#include <vector>

#include "qcomb/rational.hpp"

namespace qcomb {

struct Alphabet {
  int size = 1;
  std::vector<std::string> labels;  // optional; empty or one per symbol
};

/// Per-symbol occurrence counts of a length-T sequence.
struct MultiplicityVector {
  std::vector<long> counts;
  long total() const;
};

/// Exact probability weights, non-negative, summing to one.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> weights);
  static WeightVector uniform(int m);
  const std::vector<Rational>& weights() const { return w_; }
  const Rational& operator[](std::size_t i) const { return w_[i]; }
  int size() const { return static_cast<int>(w_.size()); }

 private:
  std::vector<Rational> w_;
};

/// States grouped by exact energy equality. Levels ascending, distinct.
struct EnergyPartition {
  std::vector<double> levels;
  std::vector<long> sizes;
  std::vector<double> entropies;  // ln of sizes (k_B = 1)
};

/// Number of macrostates C(T+M-1, M-1) of length-T sequences over M symbols.
Integer macrostate_count(int m, long t);

/// Multinomial size T! / (k_1! ... k_M!) of one macrostate.
Integer macrostate_size(const MultiplicityVector& k);

/// Exact multinomial probability N_k * prod alpha_i^{k_i}; 0^0 = 1.
Rational multinomial_probability(const MultiplicityVector& k, const WeightVector& alpha);

/// -sum f_i ln f_i in nats; zero frequencies contribute nothing.
double shannon_entropy(std::span<const double> freqs);

/// Which terms of the ln n! expansion to keep.
enum class StirlingTerms {
  kSuperlinear,  // n ln n - n
  kLog,          // + (1/2) ln(2 pi n)
  kInv12,        // + 1/(12n)
  kInv360,       // - 1/(360 n^3)
};

double stirling_ln_factorial(long n, StirlingTerms terms);

/// ln n! via the exact big-integer factorial.
double ln_factorial(long n);

/// ln of the binomial macrostate probability, by exact factorials then logs:
/// ln T! - ln k1! - ln (T-k1)! + k1 ln a1 + (T-k1) ln a2.
double binomial_entropy_exact(long k1, long t, const Rational& a1, const Rational& a2);

/// Gaussian approximation ln sqrt(1/(2 pi T a1 a2)) - (k1 - a1 T)^2 / (2 T a1 a2).
double binomial_entropy_star(double k1, long t, double a1);

/// Groups states by exact energy equality; reports sizes and Boltzmann entropies.
EnergyPartition microcanonical(std::span<const double> energies);

struct CanonicalEnsemble {
  double partition_function;               // Z
  std::vector<double> microstate_weights;  // e^{-E_k/T} / Z per level
  std::vector<double> level_probabilities; // N_k * weight, sums to 1
};

CanonicalEnsemble canonical_weights(const EnergyPartition& partition, double temperature);

/// All multiplicity vectors with sum t over m symbols, ascending lex order.
std::vector<MultiplicityVector> enumerate_macrostates(int m, long t);

}  // namespace qcomb
