#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qcomb/group.hpp"

using namespace qcomb;

namespace {

Permutation cyc(const std::string& s, int n) { return Permutation::from_cycles(s, n); }

// independent closure oracle: repeated all-pairs products over a plain set
std::size_t closure_order(int degree, const std::vector<Permutation>& gens) {
  std::set<std::vector<int>> seen;
  seen.insert(Permutation::identity(degree).images());
  for (const auto& g : gens) seen.insert(g.images());
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::vector<int>> next = seen;
    for (const auto& a : seen)
      for (const auto& b : seen) {
        auto prod = Permutation(a) * Permutation(b);
        if (next.insert(prod.images()).second) grew = true;
      }
    seen.swap(next);
  }
  return seen.size();
}

const char* kIcoGenA = "(2 3 4 5 6)(8 9 10 11 12)";
const char* kIcoGenB = "(1 2)(3 6)(4 10)(5 11)(7 8)(9 12)";

}  // namespace

TEST_CASE("permutation basics and cycle notation") {
  Permutation p = cyc("(1 2 3 4 5)", 5);
  CHECK(p(0) == 1);
  CHECK(p(4) == 0);
  CHECK(p.order() == 5);
  CHECK(p.cycle_string() == "(1 2 3 4 5)");
  CHECK(Permutation::identity(4).cycle_string() == "()");

  Permutation q = cyc("(1 2)(3 4)", 4);
  CHECK(q * q == Permutation::identity(4));
  CHECK(q.inverse() == q);

  // composition applies the right factor first: (a*b)(i) = a(b(i))
  Permutation a = cyc("(1 2)", 3);
  Permutation b = cyc("(2 3)", 3);
  CHECK((a * b).images() == std::vector<int>{1, 2, 0});

  CHECK(Permutation::from_cycles(q.cycle_string(), 4) == q);
  CHECK_THROWS_AS(cyc("(1 9)", 4), ParseError);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
}

TEST_CASE("group generation and closure") {
  std::vector<Permutation> a5_gens{cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)", 5)};
  GroupTable a5 = GroupTable::generate(5, a5_gens);
  CHECK(a5.order() == 60);
  CHECK(closure_order(5, a5_gens) == 60);

  GroupTable trivial = GroupTable::generate(3, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.orbits().size() == 3);

  GroupTable ico = GroupTable::generate(
      12, {cyc(kIcoGenA, 12), cyc(kIcoGenB, 12)});
  CHECK(ico.order() == 60);
  CHECK(ico.is_transitive());

  CHECK_THROWS_AS(GroupTable::generate(5, a5_gens, 30), CapExceededError);

  // closure property on random pairs
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, a5.order() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    int i = pick(rng), j = pick(rng);
    CHECK(a5.index_of(a5.element(i) * a5.element(j)) == a5.mul(i, j));
    CHECK(a5.contains(a5.element(i).inverse()));
    CHECK(a5.mul(i, a5.inv(i)) == a5.identity_index());
  }
}

TEST_CASE("presentation check") {
  GroupTable a5 = GroupTable::generate(5, {cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)", 5)});
  Permutation a = cyc("(1 2 3 4 5)", 5);

  // search for an involution completing the presentation
  bool found = false;
  for (const auto& b : a5.elements()) {
    if (b.order() != 2) continue;
    Permutation ab = a * b;
    if (ab * ab * ab == Permutation::identity(5) && verify_presentation(a5, a, b)) {
      found = true;
      break;
    }
  }
  CHECK(found);
  CHECK_FALSE(verify_presentation(a5, Permutation::identity(5), Permutation::identity(5)));

  GroupTable ico = GroupTable::generate(12, {cyc(kIcoGenA, 12), cyc(kIcoGenB, 12)});
  CHECK(verify_presentation(ico, cyc(kIcoGenA, 12), cyc(kIcoGenB, 12)));
}

TEST_CASE("orbits") {
  GroupTable ico = GroupTable::generate(12, {cyc(kIcoGenA, 12), cyc(kIcoGenB, 12)});
  auto orbs = ico.orbits();
  REQUIRE(orbs.size() == 1);
  CHECK(orbs[0].size() == 12);

  GroupTable a5 = GroupTable::generate(5, {cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)", 5)});
  CHECK(a5.orbits().size() == 1);
}

TEST_CASE("orbitals") {
  // 2-transitive action: diagonal plus everything else
  GroupTable a5 = GroupTable::generate(5, {cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)", 5)});
  auto orbitals = a5.orbitals();
  REQUIRE(orbitals.size() == 2);
  for (int i = 0; i < 5; ++i) {
    CHECK(orbitals[0][i][i] == 1);
    CHECK(orbitals[1][i][i] == 0);
  }

  GroupTable trivial2 = GroupTable::generate(2, {});
  CHECK(trivial2.orbitals().size() == 4);

  // disjoint, cover, invariant
  GroupTable ico = GroupTable::generate(12, {cyc(kIcoGenA, 12), cyc(kIcoGenB, 12)});
  auto ds = ico.orbitals();
  REQUIRE(ds.size() == 4);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) {
      int total = 0;
      for (const auto& d : ds) total += d[i][j];
      CHECK(total == 1);
    }
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> pick(0, ico.order() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const Permutation& g = ico.element(pick(rng));
    for (const auto& d : ds)
      for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) CHECK(d[g(i)][g(j)] == d[i][j]);
  }
}

TEST_CASE("block systems") {
  GroupTable ico = GroupTable::generate(12, {cyc(kIcoGenA, 12), cyc(kIcoGenB, 12)});
  auto blocks = ico.block_system();
  REQUIRE(blocks.has_value());
  REQUIRE(blocks->blocks.size() == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(blocks->blocks[i] == std::vector<int>{i, i + 6});

  // every generator maps blocks onto blocks
  for (int gi : ico.generator_indices()) {
    const Permutation& g = ico.element(gi);
    for (const auto& block : blocks->blocks) {
      std::vector<int> image;
      for (int x : block) image.push_back(g(x));
      std::sort(image.begin(), image.end());
      bool is_block = false;
      for (const auto& other : blocks->blocks)
        if (other == image) is_block = true;
      CHECK(is_block);
    }
  }

  GroupTable a5 = GroupTable::generate(5, {cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)", 5)});
  CHECK_FALSE(a5.block_system().has_value());  // primitive

  GroupTable c4 = cyclic_group(4);
  auto c4_blocks = c4.block_system();
  REQUIRE(c4_blocks.has_value());
  CHECK(c4_blocks->blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

  GroupTable trivial = GroupTable::generate(3, {});
  CHECK_THROWS_AS(trivial.block_system(), NotTransitiveError);
}

TEST_CASE("wreath products") {
  GroupTable c2 = cyclic_group(2);
  GroupTable s2 = symmetric_group(2);
  GroupTable sq = wreath_action(c2, s2);
  CHECK(sq.degree() == 4);
  CHECK(sq.order() == 8);  // symmetry group of the square

  GroupTable t1 = GroupTable::generate(1, {});
  CHECK(wreath_action(t1, t1).order() == 1);

  GroupTable s3 = symmetric_group(3);
  GroupTable w = wreath_action(c2, s3);
  CHECK(w.degree() == 8);
  CHECK(w.order() == 48);

  for (int d = 1; d <= 4; ++d) {
    GroupTable sd = symmetric_group(d);
    long expect = sd.order();
    for (int i = 0; i < d; ++i) expect *= 2;
    CHECK(wreath_action(c2, sd).order() == expect);  // 2^d d!
  }
}

TEST_CASE("group exponent") {
  GroupTable a5 = GroupTable::generate(5, {cyc("(1 2 3 4 5)", 5), cyc("(1 2 3)", 5)});
  CHECK(a5.exponent() == 30);
  CHECK(GroupTable::generate(3, {}).exponent() == 1);
  CHECK(cyclic_group(6).exponent() == 6);
}

TEST_CASE("generator files") {
  auto gens = parse_generator_lines("(1 2 3 4 5)\n# comment\n(1 2 3)\n", 5);
  REQUIRE(gens.size() == 2);
  CHECK(GroupTable::generate(5, gens).order() == 60);
}
