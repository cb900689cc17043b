#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qcomb/cyc_matrix.hpp"
#include "qcomb/group.hpp"

namespace qcomb {

/// Vector of natural multiplicities; the raw, pre-projection quantum state.
using NatVector = std::vector<Integer>;

/**
 * Invariant bilinear form of one invariant subspace of a permutation module,
 * stored as a cyclotomic linear combination of the action's orbital matrices.
 *
 * The induced matrix B is symmetric, idempotent and commutes with every
 * permutation matrix of the group; its trace is the subspace dimension.
 */
class InvariantForm {
 public:
  InvariantForm(std::string label,
                std::shared_ptr<const std::vector<OrbitalMatrix>> orbitals,
                std::vector<Cyclotomic> coeffs);

  const std::string& label() const { return label_; }
  int degree() const { return degree_; }
  int dimension() const { return dimension_; }
  const std::vector<Cyclotomic>& coefficients() const { return coeffs_; }
  const std::vector<OrbitalMatrix>& orbitals() const { return *orbitals_; }

  /// Materializes B = sum_j coeff_j * Delta_j.
  CycMatrix matrix() const;

  /// Exact m^T B n.
  Cyclotomic inner(const NatVector& m, const NatVector& n) const;

  /// |<phi|psi>|^2 / (<phi|phi><psi|psi>) through this form.
  /// Throws ZeroProjectionError when either vector projects to zero.
  Cyclotomic born(const NatVector& phi, const NatVector& psi) const;

 private:
  std::string label_;
  std::shared_ptr<const std::vector<OrbitalMatrix>> orbitals_;
  std::vector<Cyclotomic> coeffs_;
  int degree_;
  int dimension_;
};

struct CompletenessResult {
  std::vector<Cyclotomic> parts;  // one inner product per form
  Cyclotomic total;               // must equal sum_i m_i n_i
};

/// Subspace inner products and their resummation to the standard product.
CompletenessResult completeness_check(const std::vector<InvariantForm>& forms,
                                      const NatVector& m, const NatVector& n);

/// The trivial one-dimensional form (1/n) * all-ones, defined for every
/// transitive action.
InvariantForm trivial_form(const GroupTable& g);

/**
 * The built-in order-60 model: the alternating group acting on the 12
 * icosahedron vertices, vertices numbered so antipodal pairs are {i, i+6}.
 *
 * Orbitals are stored in the order: identity, antipodal involution,
 * adjacency, complement. Forms are "1", "3", "3'", "5" and the combined
 * rational-probability form "3+3'", with coefficients in Q_5.
 */
struct IcosahedronModel {
  GroupTable group;
  Permutation gen_a;  // order 5
  Permutation gen_b;  // order 2, with a^5 = b^2 = (ab)^3 = id
  BlockSystem blocks;
  std::shared_ptr<const std::vector<OrbitalMatrix>> orbitals;
  std::vector<InvariantForm> forms;

  const InvariantForm& form(const std::string& label) const;
};

/// Embedded model data, integrity-checked on first use.
const IcosahedronModel& icosahedron_model();

}  // namespace qcomb
