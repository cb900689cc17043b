#include "qcomb/invariant_forms.hpp"

#include <algorithm>

namespace qcomb {

InvariantForm::InvariantForm(std::string label,
                             std::shared_ptr<const std::vector<OrbitalMatrix>> orbitals,
                             std::vector<Cyclotomic> coeffs)
    : label_(std::move(label)), orbitals_(std::move(orbitals)), coeffs_(std::move(coeffs)) {
  if (!orbitals_ || orbitals_->empty())
    throw DomainError("invariant form needs a non-empty orbital list");
  if (coeffs_.size() != orbitals_->size())
    throw DimensionMismatchError("one coefficient per orbital required");
  degree_ = static_cast<int>((*orbitals_)[0].size());

  Cyclotomic trace;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    long diag = 0;
    for (int i = 0; i < degree_; ++i) diag += (*orbitals_)[j][i][i];
    if (diag != 0)
      trace += coeffs_[j] * Cyclotomic::from_rational(Rational(diag));
  }
  auto r = trace.rational_part();
  if (!r || !r->is_integer())
    throw DomainError("form trace is not a rational integer");
  dimension_ = static_cast<int>(r->numerator().get_si());
}

CycMatrix InvariantForm::matrix() const {
  CycMatrix out = cyc_zero_matrix(degree_, degree_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const OrbitalMatrix& d = (*orbitals_)[j];
    for (int r = 0; r < degree_; ++r)
      for (int c = 0; c < degree_; ++c)
        if (d[r][c]) out[r][c] += coeffs_[j];
  }
  return out;
}

Cyclotomic InvariantForm::inner(const NatVector& m, const NatVector& n) const {
  if (static_cast<int>(m.size()) != degree_ || static_cast<int>(n.size()) != degree_)
    throw DimensionMismatchError("vector length must equal the action degree");
  Cyclotomic acc;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const OrbitalMatrix& d = (*orbitals_)[j];
    Integer bilinear(0);
    for (int r = 0; r < degree_; ++r) {
      if (m[r] == 0) continue;
      Integer row(0);
      for (int c = 0; c < degree_; ++c)
        if (d[r][c] && n[c] != 0) row += n[c];
      bilinear += m[r] * row;
    }
    if (bilinear != 0)
      acc += coeffs_[j] * Cyclotomic::from_rational(Rational(bilinear));
  }
  return acc;
}

Cyclotomic InvariantForm::born(const NatVector& phi, const NatVector& psi) const {
  Cyclotomic pp = inner(phi, phi);
  Cyclotomic ss = inner(psi, psi);
  if (pp.is_zero() || ss.is_zero())
    throw ZeroProjectionError("state projects to zero in subspace " + label_);
  Cyclotomic ip = inner(phi, psi);
  return ip * ip.conjugate() / (pp * ss);
}

CompletenessResult completeness_check(const std::vector<InvariantForm>& forms,
                                      const NatVector& m, const NatVector& n) {
  CompletenessResult out;
  for (const auto& f : forms) {
    out.parts.push_back(f.inner(m, n));
    out.total += out.parts.back();
  }
  return out;
}

InvariantForm trivial_form(const GroupTable& g) {
  if (!g.is_transitive())
    throw NotTransitiveError("trivial form is defined for transitive actions");
  auto orbitals = std::make_shared<const std::vector<OrbitalMatrix>>(g.orbitals());
  std::vector<Cyclotomic> coeffs(
      orbitals->size(), Cyclotomic::from_rational(Rational(1, g.degree())));
  return InvariantForm("1", std::move(orbitals), std::move(coeffs));
}

const InvariantForm& IcosahedronModel::form(const std::string& label) const {
  for (const auto& f : forms)
    if (f.label() == label) return f;
  throw DomainError("no such form: " + label);
}

namespace {

// Adjacency blocks of the vertex numbering with antipodal pairs {i, i+6}:
// vertex i < 6 is adjacent to the X-neighbors among 0..5 and to j+6 for the
// Y-neighbors; the full adjacency is [[X, Y], [Y, X]].
constexpr int kIcoX[6][6] = {
    {0, 1, 1, 1, 1, 1},
    {1, 0, 1, 0, 0, 1},
    {1, 1, 0, 1, 0, 0},
    {1, 0, 1, 0, 1, 0},
    {1, 0, 0, 1, 0, 1},
    {1, 1, 0, 0, 1, 0},
};
constexpr int kIcoY[6][6] = {
    {0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 0},
    {0, 0, 0, 0, 1, 1},
    {0, 1, 0, 0, 0, 1},
    {0, 1, 1, 0, 0, 0},
    {0, 0, 1, 1, 0, 0},
};

// Generator pair found by enumerating the automorphisms of the adjacency
// data above and picking the first (a, b) with a^5 = b^2 = (ab)^3 = id
// generating the full order-60 rotation group. Frozen; re-checked on load.
constexpr int kGenA[12] = {0, 2, 3, 4, 5, 1, 6, 8, 9, 10, 11, 7};
constexpr int kGenB[12] = {1, 0, 5, 9, 10, 2, 7, 6, 11, 3, 4, 8};

std::vector<OrbitalMatrix> paper_orbitals() {
  const int n = 12;
  OrbitalMatrix d1(n, std::vector<int>(n, 0));
  OrbitalMatrix d2 = d1, d3 = d1, d4 = d1;
  for (int i = 0; i < n; ++i) {
    d1[i][i] = 1;
    d2[i][(i + 6) % n] = 1;
  }
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      d3[i][j] = kIcoX[i][j];
      d3[i][j + 6] = kIcoY[i][j];
      d3[i + 6][j] = kIcoY[i][j];
      d3[i + 6][j + 6] = kIcoX[i][j];
      d4[i][j] = kIcoY[i][j];
      d4[i][j + 6] = kIcoX[i][j];
      d4[i + 6][j] = kIcoX[i][j];
      d4[i + 6][j + 6] = kIcoY[i][j];
    }
  return {d1, d2, d3, d4};
}

IcosahedronModel build_model() {
  Permutation a(std::vector<int>(std::begin(kGenA), std::end(kGenA)));
  Permutation b(std::vector<int>(std::begin(kGenB), std::end(kGenB)));
  GroupTable group = GroupTable::generate(12, {a, b}, 128);

  auto expected = paper_orbitals();

  // integrity checks on the frozen data
  if (group.order() != 60) throw Error("icosahedron model: wrong group order");
  if (!verify_presentation(group, a, b))
    throw Error("icosahedron model: presentation check failed");
  if (group.exponent() != 30) throw Error("icosahedron model: wrong exponent");

  // the generic orbital list is ordered by smallest pair; match it onto the
  // stored order (identity, antipodal, adjacency, complement)
  std::vector<OrbitalMatrix> lex = group.orbitals();
  if (lex.size() != expected.size())
    throw Error("icosahedron model: wrong orbital count");
  std::vector<OrbitalMatrix> ordered;
  for (const auto& want : expected) {
    auto it = std::find(lex.begin(), lex.end(), want);
    if (it == lex.end()) throw Error("icosahedron model: orbital mismatch");
    ordered.push_back(*it);
  }

  auto blocks_opt = group.block_system();
  if (!blocks_opt) throw Error("icosahedron model: expected an imprimitive action");
  for (int i = 0; i < 6; ++i)
    if (blocks_opt->blocks[i] != std::vector<int>{i, i + 6})
      throw Error("icosahedron model: unexpected block system");

  auto orbitals =
      std::make_shared<const std::vector<OrbitalMatrix>>(std::move(ordered));

  const int m = 5;
  auto rat = [&](long num, long den) {
    return Cyclotomic::from_rational(Rational(num, den), m);
  };
  // w = 1 + 2z^2 + 2z^3, the cyclotomic carrier of -sqrt(5)
  Cyclotomic w = Cyclotomic::make(
      m, {{0, Rational(1)}, {2, Rational(2)}, {3, Rational(2)}});
  Cyclotomic w20 = w * rat(1, 20);

  std::vector<InvariantForm> forms;
  forms.emplace_back("1", orbitals,
                     std::vector<Cyclotomic>{rat(1, 12), rat(1, 12), rat(1, 12), rat(1, 12)});
  forms.emplace_back("3", orbitals,
                     std::vector<Cyclotomic>{rat(1, 4), rat(-1, 4), -w20, w20});
  forms.emplace_back("3'", orbitals,
                     std::vector<Cyclotomic>{rat(1, 4), rat(-1, 4), w20, -w20});
  forms.emplace_back("5", orbitals,
                     std::vector<Cyclotomic>{rat(5, 12), rat(5, 12), rat(-1, 12), rat(-1, 12)});
  forms.emplace_back("3+3'", orbitals,
                     std::vector<Cyclotomic>{rat(1, 2), rat(-1, 2), rat(0, 1), rat(0, 1)});

  const int dims[] = {1, 3, 3, 5, 6};
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (forms[i].dimension() != dims[i])
      throw Error("icosahedron model: form dimension mismatch");

  return IcosahedronModel{std::move(group), std::move(a), std::move(b),
                          std::move(*blocks_opt), std::move(orbitals), std::move(forms)};
}

}  // namespace

const IcosahedronModel& icosahedron_model() {
  static const IcosahedronModel model = build_model();
  return model;
}

}  // namespace qcomb
