#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcomb/quantum_walk.hpp"

using namespace qcomb;

namespace {

double prob_at(const WalkState& s, long x) {
  for (const auto& [pos, p] : qw_signed_distribution(s))
    if (pos == x) return p;
  return 0.0;
}

}  // namespace

TEST_CASE("grover coin") {
  CoinOperator g2 = grover_coin(2);
  CHECK(g2.at(0, 0) == 0.0);
  CHECK(g2.at(0, 1) == 1.0);
  CHECK(g2.at(1, 0) == 1.0);
  CHECK(g2.at(1, 1) == 0.0);  // Pauli-X exactly

  CoinOperator g4 = grover_coin(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(g4.at(i, j) == (i == j ? -0.5 : 0.5));

  // reflection: G^2 = I
  for (int k = 2; k <= 8; ++k) {
    CoinOperator g = grover_coin(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Amplitude acc = 0.0;
        for (int l = 0; l < k; ++l) acc += g.at(i, l) * g.at(l, j);
        CHECK(std::abs(acc - (i == j ? 1.0 : 0.0)) < 1e-14);
      }
    CHECK(unitarity_residual(g) < 1e-14);
  }
  CHECK_THROWS_AS(grover_coin(1), DomainError);
}

TEST_CASE("hadamard coin") {
  CoinOperator h = hadamard_coin();
  CHECK(unitarity_residual(h) < 1e-15);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Amplitude acc = 0.0;
      for (int l = 0; l < 2; ++l) acc += h.at(i, l) * h.at(l, j);
      CHECK(std::abs(acc - (i == j ? 1.0 : 0.0)) < 1e-15);  // H^2 = I
    }
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(h.at(0, 0) - s) < 1e-15);
  CHECK(std::abs(h.at(1, 1) + s) < 1e-15);
}

TEST_CASE("single step") {
  // |0> tensor |dir0>: amplitude s at (1, dir0) and s at (N-1, dir1)
  auto one = qw_step(WalkState::basis(8, 2, 0, 0), hadamard_coin());
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(one.amplitude(1, 0) - s) < 1e-15);
  CHECK(std::abs(one.amplitude(7, 1) - s) < 1e-15);
  CHECK(std::abs(one.norm() - 1.0) < 1e-15);

  // identity coin on a direction-0 state is pure translation
  CoinOperator id{2, {1.0, 0.0, 0.0, 1.0}};
  auto moved = qw_evolve(WalkState::basis(8, 2, 0, 0), id, 3);
  CHECK(std::abs(moved.amplitude(3, 0) - 1.0) < 1e-15);

  CHECK_THROWS_AS(qw_step(WalkState::basis(8, 2, 0, 0), grover_coin(4)),
                  DimensionMismatchError);
  CHECK_THROWS_AS(qw_step(WalkState::basis(8, 3, 0, 0), grover_coin(3)), DomainError);
}

TEST_CASE("hadamard walk distributions") {
  auto t0 = qw_evolve(WalkState::basis(64, 2, 0, 0), hadamard_coin(), 0);
  CHECK(prob_at(t0, 0) == doctest::Approx(1.0));

  auto t2 = qw_evolve(WalkState::basis(64, 2, 0, 0), hadamard_coin(), 2);
  CHECK(prob_at(t2, 2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(prob_at(t2, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(prob_at(t2, -2) == doctest::Approx(0.25).epsilon(1e-12));

  auto t3 = qw_evolve(WalkState::basis(64, 2, 0, 0), hadamard_coin(), 3);
  CHECK(prob_at(t3, 3) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(prob_at(t3, 1) == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(prob_at(t3, -1) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(prob_at(t3, -3) == doctest::Approx(0.125).epsilon(1e-12));

  double total = 0.0;
  for (double p : qw_distribution(t3)) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("unitarity over long runs") {
  auto state = qw_evolve(WalkState::basis(256, 2, 0, 0), hadamard_coin(), 1000);
  CHECK(std::abs(state.norm() - 1.0) < 1e-10);

  // grover walk with self-loop directions on an even coin
  auto g4 = qw_evolve(WalkState::basis(64, 4, 0, 0), grover_coin(4), 200);
  CHECK(std::abs(g4.norm() - 1.0) < 1e-10);
}

TEST_CASE("ballistic spread versus the classical walk") {
  auto spread = qw_evolve(WalkState::basis(512, 2, 0, 0), hadamard_coin(), 100);
  auto [mean, sigma] = qw_position_moments(spread);
  CHECK(sigma > 2.0 * std::sqrt(100.0));
}

TEST_CASE("reflection symmetry of the balanced start") {
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Amplitude> sym{Amplitude(s, 0.0), Amplitude(0.0, s)};
  auto state = qw_evolve(WalkState::localized(128, 2, 0, sym), hadamard_coin(), 40);
  for (long x = 1; x <= 45; ++x)
    CHECK(std::abs(prob_at(state, x) - prob_at(state, -x)) < 1e-10);
}

TEST_CASE("state validation") {
  CHECK_THROWS_AS(WalkState(4, 2, std::vector<Amplitude>(8, 0.5)), DomainError);
  CHECK_THROWS_AS(WalkState(4, 2, std::vector<Amplitude>(3, 1.0)),
                  DimensionMismatchError);
  CHECK_THROWS_AS(WalkState::basis(4, 2, 9, 0), DomainError);
}
