#include "qcomb/gauge.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace qcomb {

int path_product(const ConnectionPath& p) {
  if (!p.group) throw DomainError("path needs a group");
  int acc = p.group->identity_index();
  for (int s : p.steps) acc = p.group->mul(acc, s);
  return acc;
}

int holonomy(const ConnectionPath& p, const ConnectionPath& q) {
  if (p.group != q.group) throw GroupMismatchError("paths from different groups");
  if (p.steps.size() != q.steps.size())
    throw DimensionMismatchError("paths must have equal length");
  int gp = path_product(p);
  int fq = path_product(q);
  return p.group->mul(p.group->inv(fq), gp);
}

namespace {

// step counts k_0..k_{n-1} with sum T; element g^j contributes j*k_j to the
// residue; prefix divisions of T! stay exact at every level
void enumerate_compositions(int n, int pos, long remaining, long residue_acc,
                            const WeightVector& alpha, const Integer& mult_prefix,
                            const Rational& weight_prefix, std::vector<Rational>& out) {
  if (pos == n - 1) {
    if (alpha[pos].is_zero() && remaining > 0) return;
    Integer mult = mult_prefix / factorial(remaining);
    Rational prob = weight_prefix *
                    rational_pow(alpha[pos], static_cast<unsigned long>(remaining));
    long residue = (residue_acc + static_cast<long>(pos) * remaining) % n;
    out[residue] += Rational(mult) * prob;
    return;
  }
  for (long k = 0; k <= remaining; ++k) {
    if (alpha[pos].is_zero() && k > 0) break;
    enumerate_compositions(n, pos + 1, remaining - k,
                           (residue_acc + static_cast<long>(pos) * k) % n, alpha,
                           mult_prefix / factorial(k),
                           weight_prefix * rational_pow(alpha[pos], static_cast<unsigned long>(k)),
                           out);
  }
}

}  // namespace

std::vector<Rational> cyclic_macrostate_distribution(int n, const WeightVector& alpha,
                                                     long t, double enumeration_cap) {
  if (n < 1) throw DomainError("cyclic order must be >= 1");
  if (t < 0) throw DomainError("negative time");
  if (alpha.size() != n) throw DimensionMismatchError("one weight per group element");
  if (Rational(macrostate_count(n, t)).to_double() > enumeration_cap)
    throw CapExceededError("composition enumeration exceeds cap");
  std::vector<Rational> out(n, Rational(0));
  enumerate_compositions(n, 0, t, 0, alpha, factorial(t), Rational(1), out);
  return out;
}

Rational cyclic_macrostate_probability(int n, const WeightVector& alpha, long t, int m,
                                       double enumeration_cap) {
  if (m < 0 || m >= n) throw DomainError("residue out of range");
  return cyclic_macrostate_distribution(n, alpha, t, enumeration_cap)[m];
}

UnitaryRep UnitaryRep::permutation(std::shared_ptr<const GroupTable> group) {
  if (!group) throw DomainError("representation needs a group");
  const int n = group->degree();
  std::vector<CycMatrix> mats;
  mats.reserve(group->order());
  for (const auto& g : group->elements()) {
    CycMatrix p = cyc_zero_matrix(n, n);
    for (int j = 0; j < n; ++j)
      p[g(j)][j] = Cyclotomic::from_rational(Rational(1));
    mats.push_back(std::move(p));
  }
  return UnitaryRep(std::move(group), std::move(mats), n);
}

bool UnitaryRep::validate() const {
  const int n = group_->order();
  CycMatrix id = cyc_identity_matrix(dim_);
  for (int i = 0; i < n; ++i) {
    if (!cyc_mat_equal(cyc_mat_mul(cyc_mat_conj_transpose(mats_[i]), mats_[i]), id))
      return false;
    for (int j = 0; j < n; ++j)
      if (!cyc_mat_equal(cyc_mat_mul(mats_[i], mats_[j]), mats_[group_->mul(i, j)]))
        return false;
  }
  return true;
}

CycVector UnitaryRep::evolve(const ConnectionPath& path, const CycVector& psi0) const {
  if (path.group != group_) throw GroupMismatchError("path group mismatch");
  if (static_cast<int>(psi0.size()) != dim_)
    throw DimensionMismatchError("state dimension mismatch");
  int w = path_product(path);
  return cyc_mat_apply(mats_[group_->inv(w)], psi0);
}

namespace {

using EMatrix = Eigen::MatrixXcd;

EMatrix to_eigen(const CMatrix& m) {
  if (m.empty()) throw DomainError("empty matrix");
  const auto rows = static_cast<Eigen::Index>(m.size());
  const auto cols = static_cast<Eigen::Index>(m[0].size());
  EMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(m[i].size()) != cols)
      throw DimensionMismatchError("ragged matrix");
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = m[i][j];
  }
  return out;
}

CMatrix from_eigen(const EMatrix& m) {
  CMatrix out(m.rows(), std::vector<std::complex<double>>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

HamiltonianResult hamiltonian_of(const CMatrix& u, int order_cap) {
  EMatrix eu = to_eigen(u);
  if (eu.rows() != eu.cols()) throw DomainError("unitary must be square");
  const auto n = eu.rows();
  if ((eu.adjoint() * eu - EMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
    throw DomainError("matrix is not unitary");

  // order by direct iteration
  int order = 0;
  EMatrix power = eu;
  for (int k = 1; k <= order_cap; ++k) {
    if ((power - EMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-9) {
      order = k;
      break;
    }
    power *= eu;
  }
  if (order == 0) throw CapExceededError("matrix order exceeds cap");

  // U is normal, so its Schur form is diagonal with the eigenphases
  Eigen::ComplexSchur<EMatrix> schur(eu, true);
  if (schur.info() != Eigen::Success) throw Error("Schur decomposition failed");
  EMatrix t = schur.matrixT();
  EMatrix q = schur.matrixU();
  double off = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) off = std::max(off, std::abs(t(i, j)));
  if (off > 1e-8) throw DomainError("matrix is not normal");

  const double two_pi = 2.0 * std::numbers::pi;
  Eigen::VectorXd energies(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double e = -std::arg(t(i, i));  // U = exp(-iH)
    if (e < 0) e += two_pi;
    if (e >= two_pi) e -= two_pi;
    // eigenvalues of a finite-order unitary sit on {2 pi k / order}
    double snapped = std::round(e * order / two_pi) * two_pi / order;
    if (std::abs(e - snapped) > 1e-6 && std::abs(e - snapped - two_pi) > 1e-6)
      throw DomainError("eigenphase off the 2 pi k / n lattice");
    energies(i) = e;
  }

  EMatrix h = q * energies.asDiagonal() * q.adjoint();
  HamiltonianResult out;
  out.hamiltonian = from_eigen(h);
  out.energies.assign(energies.data(), energies.data() + n);
  std::sort(out.energies.begin(), out.energies.end());
  out.order = order;
  return out;
}

CMatrix hermitian_exp_minus_i(const CMatrix& h) {
  EMatrix eh = to_eigen(h);
  if (eh.rows() != eh.cols()) throw DomainError("matrix must be square");
  if ((eh - eh.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
    throw DomainError("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<EMatrix> es(eh);
  if (es.info() != Eigen::Success) throw Error("eigendecomposition failed");
  Eigen::VectorXcd phases(eh.rows());
  for (Eigen::Index i = 0; i < eh.rows(); ++i)
    phases(i) = std::exp(std::complex<double>(0.0, -es.eigenvalues()(i)));
  EMatrix out = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return from_eigen(out);
}

CMatrix permutation_matrix_complex(const Permutation& p) {
  const int n = p.degree();
  CMatrix out(n, std::vector<std::complex<double>>(n, 0.0));
  for (int j = 0; j < n; ++j) out[p(j)][j] = 1.0;
  return out;
}

}  // namespace qcomb
