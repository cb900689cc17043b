#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "qcomb/cyc_matrix.hpp"
#include "qcomb/ensembles.hpp"
#include "qcomb/group.hpp"

namespace qcomb {

struct GroupMismatchError : Error {
  using Error::Error;
};

/**
 * Formal weighted sum of group elements; probability-weighted sums carry the
 * statistics of gauge-connection macrostates. Scalar is Rational (exact, the
 * default and the test reference) or double (for large-T demos).
 */
template <class Scalar>
class GroupAlgebraElementT {
 public:
  GroupAlgebraElementT(std::shared_ptr<const GroupTable> group, std::vector<Scalar> weights)
      : group_(std::move(group)), weights_(std::move(weights)) {
    if (!group_) throw DomainError("group algebra element needs a group");
    if (static_cast<int>(weights_.size()) != group_->order())
      throw DimensionMismatchError("one weight per group element required");
  }

  /// The basis element delta_g.
  static GroupAlgebraElementT delta(std::shared_ptr<const GroupTable> group, int element) {
    std::vector<Scalar> w(group->order(), Scalar(0));
    w.at(element) = Scalar(1);
    return GroupAlgebraElementT(std::move(group), std::move(w));
  }

  static GroupAlgebraElementT uniform(std::shared_ptr<const GroupTable> group) {
    const int n = group->order();
    std::vector<Scalar> w(n, scalar_inverse_of(n));
    return GroupAlgebraElementT(std::move(group), std::move(w));
  }

  const std::shared_ptr<const GroupTable>& group() const { return group_; }
  const std::vector<Scalar>& weights() const { return weights_; }

  /// Convolution through the group table.
  GroupAlgebraElementT multiply(const GroupAlgebraElementT& other) const {
    if (group_ != other.group_)
      throw GroupMismatchError("group algebra elements from different groups");
    const int n = group_->order();
    std::vector<Scalar> out(n, Scalar(0));
    for (int i = 0; i < n; ++i) {
      if (weights_[i] == Scalar(0)) continue;
      for (int j = 0; j < n; ++j) {
        if (other.weights_[j] == Scalar(0)) continue;
        out[group_->mul(i, j)] += weights_[i] * other.weights_[j];
      }
    }
    return GroupAlgebraElementT(group_, std::move(out));
  }

  /// T-th power by binary exponentiation; for T >= 1 the multiplication
  /// count is at most 2*ceil(log2 T).
  GroupAlgebraElementT power(unsigned long long t, long* mult_count = nullptr) const {
    long count = 0;
    GroupAlgebraElementT acc = delta(group_, group_->identity_index());
    GroupAlgebraElementT base = *this;
    while (t > 0) {
      if (t & 1ULL) {
        acc = acc.multiply(base);
        ++count;
      }
      t >>= 1;
      if (t) {
        base = base.multiply(base);
        ++count;
      }
    }
    if (mult_count) *mult_count = count;
    return acc;
  }

  friend GroupAlgebraElementT operator*(const GroupAlgebraElementT& a,
                                        const GroupAlgebraElementT& b) {
    return a.multiply(b);
  }

 private:
  static Scalar scalar_inverse_of(int n);

  std::shared_ptr<const GroupTable> group_;
  std::vector<Scalar> weights_;
};

template <>
inline Rational GroupAlgebraElementT<Rational>::scalar_inverse_of(int n) {
  return Rational(1, static_cast<long>(n));
}
template <>
inline double GroupAlgebraElementT<double>::scalar_inverse_of(int n) {
  return 1.0 / n;
}

using GroupAlgebraElement = GroupAlgebraElementT<Rational>;
using GroupAlgebraElementF = GroupAlgebraElementT<double>;

/// Sequence of elementary parallel transports (group table indices).
struct ConnectionPath {
  std::shared_ptr<const GroupTable> group;
  std::vector<int> steps;
};

/// Index of the ordered product g_1 g_2 ... g_T.
int path_product(const ConnectionPath& p);

/// Holonomy f_T^{-1} ... f_1^{-1} g_1 ... g_T of the pair (p, q); paths are
/// equivalent iff the result is the identity index.
int holonomy(const ConnectionPath& p, const ConnectionPath& q);

/// Exact macrostate probability of residue m for the cyclic group C_N, by
/// enumeration of step-count compositions. Independent of the group-algebra
/// route; serves as its oracle.
Rational cyclic_macrostate_probability(int n, const WeightVector& alpha, long t, int m,
                                       double enumeration_cap = 5e6);

/// All residues at once (one enumeration pass).
std::vector<Rational> cyclic_macrostate_distribution(int n, const WeightVector& alpha,
                                                     long t, double enumeration_cap = 5e6);

/// Exact unitary representation: one cyclotomic matrix per group element.
class UnitaryRep {
 public:
  /// The permutation representation P(g) e_j = e_{g(j)}.
  static UnitaryRep permutation(std::shared_ptr<const GroupTable> group);

  int dimension() const { return dim_; }
  const std::shared_ptr<const GroupTable>& group() const { return group_; }
  const CycMatrix& matrix(int element) const { return mats_.at(element); }

  /// Exact homomorphism and unitarity check over all element pairs.
  bool validate() const;

  /// psi_T = rho((g_1 ... g_T)^{-1}) psi_0.
  CycVector evolve(const ConnectionPath& path, const CycVector& psi0) const;

 private:
  UnitaryRep(std::shared_ptr<const GroupTable> group, std::vector<CycMatrix> mats, int dim)
      : group_(std::move(group)), mats_(std::move(mats)), dim_(dim) {}

  std::shared_ptr<const GroupTable> group_;
  std::vector<CycMatrix> mats_;
  int dim_;
};

using CMatrix = std::vector<std::vector<std::complex<double>>>;

struct HamiltonianResult {
  CMatrix hamiltonian;            // Hermitian, H = i ln U
  std::vector<double> energies;   // eigenvalues in [0, 2 pi), ascending
  int order;                      // smallest n with U^n = I
};

/// H = i ln U for a unitary U of finite order, by eigendecomposition.
/// Eigenvalues land on {2 pi k / n}; exp(-iH) reproduces U.
HamiltonianResult hamiltonian_of(const CMatrix& u, int order_cap = 10'000);

/// exp(-iH) of a Hermitian matrix, by fresh eigendecomposition.
CMatrix hermitian_exp_minus_i(const CMatrix& h);

CMatrix permutation_matrix_complex(const Permutation& p);

}  // namespace qcomb
