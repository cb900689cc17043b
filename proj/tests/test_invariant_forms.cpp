#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcomb/invariant_forms.hpp"

using namespace qcomb;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

NatVector basis_vec(int i) {
  NatVector v(12, Integer(0));
  v[i] = 1;
  return v;
}

Cyclotomic constant(const Rational& r) { return Cyclotomic::from_rational(r); }

// independent route: inner product through the materialized matrix
Cyclotomic matrix_inner(const InvariantForm& f, const NatVector& m, const NatVector& n) {
  CycMatrix b = f.matrix();
  Cyclotomic acc;
  for (int i = 0; i < f.degree(); ++i) {
    if (m[i] == 0) continue;
    for (int j = 0; j < f.degree(); ++j) {
      if (n[j] == 0) continue;
      acc += constant(Rational(Integer(m[i] * n[j]))) * b[i][j];
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("model data integrity") {
  const auto& model = icosahedron_model();
  CHECK(model.group.order() == 60);
  CHECK(model.group.degree() == 12);
  CHECK(model.gen_a.order() == 5);
  CHECK(model.gen_b.order() == 2);
  CHECK(model.orbitals->size() == 4);
  CHECK(model.forms.size() == 5);

  // adjacency orbital, first row: neighbors 2..6 in 1-based numbering
  const OrbitalMatrix& d3 = (*model.orbitals)[2];
  CHECK(d3[0] == std::vector<int>{0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0});
  for (int i = 0; i < 12; ++i) {
    int row_sum = 0;
    for (int j = 0; j < 12; ++j) row_sum += d3[i][j];
    CHECK(row_sum == 5);
  }

  // antipodal involution
  const OrbitalMatrix& d2 = (*model.orbitals)[1];
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) CHECK(d2[i][j] == (j == (i + 6) % 12 ? 1 : 0));
}

TEST_CASE("form matrices") {
  const auto& model = icosahedron_model();

  // B_1 is the all-1/12 matrix
  CycMatrix b1 = model.form("1").matrix();
  for (const auto& row : b1)
    for (const auto& x : row) CHECK(x == constant(R(1, 12)));

  // trace of B_5 equals its dimension 5
  auto tr = cyc_mat_trace(model.form("5").matrix()).rational_part();
  REQUIRE(tr.has_value());
  CHECK(*tr == R(5));

  CHECK(model.form("1").dimension() == 1);
  CHECK(model.form("3").dimension() == 3);
  CHECK(model.form("3'").dimension() == 3);
  CHECK(model.form("5").dimension() == 5);
  CHECK(model.form("3+3'").dimension() == 6);

  // spot-check idempotence and symmetry of one irrational-coefficient form
  CycMatrix b3 = model.form("3").matrix();
  CHECK(cyc_mat_equal(cyc_mat_mul(b3, b3), b3));
  CHECK(cyc_mat_equal(cyc_mat_conj_transpose(b3), b3));
}

TEST_CASE("form_inner examples") {
  const auto& model = icosahedron_model();
  NatVector e1 = basis_vec(0);

  CHECK(model.form("1").inner(e1, e1) == constant(R(1, 12)));
  CHECK(model.form("3+3'").inner(e1, e1) == constant(R(1, 2)));

  NatVector ones(12, Integer(1));
  CHECK(model.form("1").inner(ones, ones) == constant(R(12)));

  NatVector short_vec(5, Integer(1));
  CHECK_THROWS_AS(model.form("1").inner(short_vec, short_vec), DimensionMismatchError);

  // coefficient route agrees with the materialized-matrix route
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> digit(0, 9);
  for (int trial = 0; trial < 10; ++trial) {
    NatVector m(12), n(12);
    for (auto& x : m) x = digit(rng);
    for (auto& x : n) x = digit(rng);
    for (const auto& f : model.forms) CHECK(f.inner(m, n) == matrix_inner(f, m, n));
  }
}

TEST_CASE("born probabilities") {
  const auto& model = icosahedron_model();
  NatVector e1 = basis_vec(0), e2 = basis_vec(1), e7 = basis_vec(6);

  CHECK(model.form("3+3'").born(e1, e1) == constant(R(1)));
  CHECK(model.form("1").born(e1, e2) == constant(R(1)));

  // antipodal vertex projects to the opposite direction; probability still 1
  CHECK(model.form("3+3'").inner(e1, e7) == constant(R(-1, 2)));
  CHECK(model.form("3+3'").born(e1, e7) == constant(R(1)));

  // basis pairs overlap a single orbital, so B_3 born values on them are
  // still rational; a two-vertex state mixes orbitals and exposes sqrt(5)
  CHECK(model.form("3").born(e1, e2) == constant(R(1, 5)));
  NatVector mixed = basis_vec(0);
  mixed[1] = 1;
  CHECK_FALSE(model.form("3").born(e1, mixed).rational_part().has_value());

  // an antipodally symmetric vector projects to zero in 3+3'
  NatVector sym(12, Integer(1));
  CHECK_THROWS_AS(model.form("3+3'").born(sym, e1), ZeroProjectionError);
}

TEST_CASE("completeness") {
  const auto& model = icosahedron_model();
  std::vector<InvariantForm> decomposition{model.form("1"), model.form("3"),
                                           model.form("3'"), model.form("5")};
  NatVector e1 = basis_vec(0);
  auto res = completeness_check(decomposition, e1, e1);
  REQUIRE(res.parts.size() == 4);
  CHECK(res.parts[0] == constant(R(1, 12)));
  CHECK(res.parts[1] == constant(R(1, 4)));
  CHECK(res.parts[2] == constant(R(1, 4)));
  CHECK(res.parts[3] == constant(R(5, 12)));
  CHECK(res.total == constant(R(1)));

  NatVector zero(12, Integer(0));
  auto zres = completeness_check(decomposition, zero, zero);
  for (const auto& part : zres.parts) CHECK(part.is_zero());

  std::mt19937 rng(29);
  std::uniform_int_distribution<int> digit(0, 9);
  for (int trial = 0; trial < 25; ++trial) {
    NatVector m(12), n(12);
    for (auto& x : m) x = digit(rng);
    for (auto& x : n) x = digit(rng);
    Integer dot(0);
    for (int i = 0; i < 12; ++i) dot += m[i] * n[i];
    CHECK(completeness_check(decomposition, m, n).total == constant(Rational(dot)));
  }
}

TEST_CASE("invariance under the group") {
  const auto& model = icosahedron_model();
  for (const auto& f : model.forms) {
    CycMatrix b = f.matrix();
    for (const auto& g : model.group.elements())
      for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
          if (!(b[g(i)][g(j)] == b[i][j])) {
            CHECK(false);
            return;
          }
  }
  CHECK(true);
}

TEST_CASE("trivial form for any transitive action") {
  GroupTable a5 = GroupTable::generate(
      5, {Permutation::from_cycles("(1 2 3 4 5)", 5),
          Permutation::from_cycles("(1 2 3)", 5)});
  InvariantForm triv = trivial_form(a5);
  CHECK(triv.dimension() == 1);
  CycMatrix m = triv.matrix();
  for (const auto& row : m)
    for (const auto& x : row) CHECK(x == constant(R(1, 5)));

  // particle-counter factorization: (1/n)(sum m)(sum n)
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> digit(0, 9);
  for (int trial = 0; trial < 20; ++trial) {
    NatVector mv(5), nv(5);
    Integer sm(0), sn(0);
    for (auto& x : mv) {
      x = digit(rng);
      sm += x;
    }
    for (auto& x : nv) {
      x = digit(rng);
      sn += x;
    }
    CHECK(triv.inner(mv, nv) == constant(Rational(sm * sn, Integer(5))));
  }

  GroupTable trivial_group = GroupTable::generate(3, {});
  CHECK_THROWS_AS(trivial_form(trivial_group), NotTransitiveError);
}
