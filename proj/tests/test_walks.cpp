#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qcomb/walks.hpp"

using namespace qcomb;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

LatticePoint pt(std::vector<int> c) { return LatticePoint{std::move(c)}; }

// enumerate all admissible interior waypoint sequences for a given tau
void all_chains(const std::vector<long>& tau, long x, std::size_t level,
                std::vector<long>& chain, std::vector<std::vector<long>>& out) {
  const long t = tau.back();
  if (level + 1 == tau.size()) {
    chain.push_back(x);
    out.push_back(chain);
    chain.pop_back();
    return;
  }
  const long ti = tau[level];
  for (long xi = -ti; xi <= ti; ++xi) {
    if (((xi - ti) & 1L) != 0) continue;
    if (std::abs(xi - chain.back()) > ti - tau[level - 1]) continue;
    if (std::abs(x - xi) > t - ti) continue;
    chain.push_back(xi);
    all_chains(tau, x, level + 1, chain, out);
    chain.pop_back();
  }
}

}  // namespace

TEST_CASE("walk distributions") {
  WeightVector sym2 = WeightVector::uniform(2);
  auto d0 = walk_distribution(1, 0, sym2);
  REQUIRE(d0.size() == 1);
  CHECK(d0.at(pt({0})) == R(1));

  auto d2 = walk_distribution(1, 2, sym2);
  CHECK(d2.at(pt({-2})) == R(1, 4));
  CHECK(d2.at(pt({0})) == R(1, 2));
  CHECK(d2.at(pt({2})) == R(1, 4));

  auto planar = walk_distribution(2, 1, WeightVector::uniform(4));
  REQUIRE(planar.size() == 4);
  for (const auto& [p, prob] : planar) CHECK(prob == R(1, 4));

  // probabilities always sum to 1 exactly
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> digit(1, 5);
  for (int d : {1, 2, 3}) {
    std::vector<Rational> raw(2 * d);
    Rational sum(0);
    for (auto& w : raw) {
      w = R(digit(rng));
      sum += w;
    }
    for (auto& w : raw) w /= sum;
    Rational total(0);
    for (const auto& [p, prob] : walk_distribution(d, 5, WeightVector(raw))) total += prob;
    CHECK(total == R(1));
  }

  // d=1 marginal equals the closed-form endpoint probability, v = a1 - a2
  WeightVector drift({R(2, 3), R(1, 3)});
  auto dist = walk_distribution(1, 6, drift);
  for (const auto& [p, prob] : dist)
    CHECK(prob == point_probability_exact(p.coords[0], 6, R(1, 3)));
}

TEST_CASE("macrostate counts per dimension") {
  CHECK(walk_macrostate_count(3, 1) == 6);
  CHECK(walk_macrostate_count(3, 2) == 19);
  CHECK(walk_macrostate_count(1, 5) == 6);
  for (long t = 0; t <= 8; ++t) {
    long expect = (t + 1) * (2 * (t + 1) * (t + 1) + 1) / 3;  // octahedral number
    CHECK(walk_macrostate_count(3, t) == expect);
  }
  // agreement with the support of the symmetric distribution
  for (int d : {1, 2}) {
    for (long t : {3L, 6L}) {
      auto dist = walk_distribution(d, t, WeightVector::uniform(2 * d));
      CHECK(walk_macrostate_count(d, t) == static_cast<long>(dist.size()));
    }
  }
}

TEST_CASE("point probabilities") {
  CHECK(point_probability_exact(0, 2, R(0)) == R(1, 2));
  CHECK(point_probability_exact(3, 3, R(1)) == R(1));
  CHECK(point_probability(0, 100, 0.0) == doctest::Approx(0.0795892).epsilon(1e-6));

  // float route matches the exact route
  CHECK(point_probability(4, 10, 0.25) ==
        doctest::Approx(point_probability_exact(4, 10, R(1, 4)).to_double())
            .epsilon(1e-12));

  CHECK_THROWS_AS(point_probability_exact(1, 2, R(0)), LightConeError);
  CHECK_THROWS_AS(point_probability_exact(5, 3, R(0)), LightConeError);
  CHECK_THROWS_AS(point_probability_exact(0, 2, R(2)), DomainError);
}

TEST_CASE("trajectory probabilities") {
  // a single segment carries probability 1
  Trajectory single = make_trajectory({0, 4}, {0, 2});
  CHECK(trajectory_probability_exact(single, R(0)) == R(1));

  // two one-step segments, both intermediate choices are equally likely
  CHECK(trajectory_probability_exact(make_trajectory({0, 1, 2}, {0, 1, 0}), R(0)) ==
        R(1, 2));
  CHECK(trajectory_probability_exact(make_trajectory({0, 1, 2}, {0, -1, 0}), R(0)) ==
        R(1, 2));

  // path counting through the middle of a 4-step bridge
  CHECK(trajectory_probability_exact(make_trajectory({0, 2, 4}, {0, 0, 0}), R(0)) ==
        R(2, 3));

  // conditional probabilities over all admissible interiors sum to 1
  for (const Rational& v : {R(0), R(1, 3)}) {
    std::vector<long> tau{0, 3, 7, 12};
    long x = 2;
    std::vector<std::vector<long>> chains;
    std::vector<long> chain{0};
    all_chains(tau, x, 1, chain, chains);
    Rational total(0);
    for (const auto& pts : chains)
      total += trajectory_probability_exact(Trajectory{tau, pts}, v);
    CHECK(total == R(1));
  }

  CHECK_THROWS_AS(make_trajectory({0, 1, 2}, {0, 2, 0}), LightConeError);
  CHECK_THROWS_AS(make_trajectory({0, 2}, {0, 1}), LightConeError);
  CHECK_THROWS_AS(trajectory_probability_exact(make_trajectory({0, 2}, {0, 2}), R(-1)),
                  DomainError);  // zero endpoint probability
}

TEST_CASE("maximum-probability trajectories") {
  auto unique = max_probability_trajectories({0, 2, 4}, 0, R(0));
  REQUIRE(unique.size() == 1);
  CHECK(unique[0].points == std::vector<long>{0, 0, 0});

  auto ties = max_probability_trajectories({0, 1, 2}, 0, R(0));
  REQUIRE(ties.size() == 2);
  CHECK(ties[0].points == std::vector<long>{0, -1, 0});
  CHECK(ties[1].points == std::vector<long>{0, 1, 0});

  // light cone pins every waypoint of an extremal endpoint
  auto forced = max_probability_trajectories({0, 5, 10}, 10, R(1, 4));
  REQUIRE(forced.size() == 1);
  CHECK(forced[0].points == std::vector<long>{0, 5, 10});

  // straight line dominates at larger T (even interior times admit it)
  auto straight = max_probability_trajectories({0, 4, 8, 12}, 0, R(0));
  REQUIRE(straight.size() == 1);
  CHECK(straight[0].points == std::vector<long>{0, 0, 0, 0});

  // odd interior times exclude x = 0 by parity; the ties are exactly the
  // unit-speed paths returning to 0, one per choice of two up-segments
  auto odd_times = max_probability_trajectories({0, 3, 6, 9, 12}, 0, R(0));
  CHECK(odd_times.size() == 6);
  for (const auto& traj : odd_times)
    for (std::size_t i = 1; i < traj.points.size(); ++i)
      CHECK(std::abs(traj.points[i] - traj.points[i - 1]) == 1);

  CHECK_THROWS_AS(max_probability_trajectories({0, 100, 200, 300, 400, 500}, 0, R(0), 1e5),
                  CapExceededError);
  CHECK_THROWS_AS(max_probability_trajectories({0, 1}, 3, R(0)), LightConeError);
}

TEST_CASE("heat kernel") {
  std::vector<double> origin1{0.0};
  CHECK(heat_kernel(1.0, origin1) ==
        doctest::Approx(1.0 / std::sqrt(4.0 * std::numbers::pi)).epsilon(1e-12));

  std::vector<double> origin2{0.0, 0.0};
  CHECK(heat_kernel(1.0, origin2) ==
        doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(1e-12));

  std::vector<double> xp{1.25, -0.5};
  std::vector<double> xm{-1.25, 0.5};
  CHECK(heat_kernel(2.0, xp) == heat_kernel(2.0, xm));

  CHECK_THROWS_AS(heat_kernel(0.0, origin1), DomainError);
}

TEST_CASE("gaussian approximation of the walk") {
  CHECK(p_star(0.0, 100.0, 0.0) ==
        doctest::Approx(std::sqrt(2.0 / (100.0 * std::numbers::pi))).epsilon(1e-12));
  CHECK(p_star(10.0, 100.0, 0.0) == doctest::Approx(0.0483941).epsilon(1e-5));

  // peak sits at x = v t
  double peak = p_star(0.5 * 80.0, 80.0, 0.5);
  CHECK(peak == doctest::Approx(std::sqrt(2.0 / (std::numbers::pi * 0.75 * 80.0))));
  CHECK(p_star(41.0, 80.0, 0.5) < peak);
  CHECK(p_star(39.0, 80.0, 0.5) < peak);

  CHECK_THROWS_AS(p_star(0.0, 10.0, 1.0), DomainError);

  // near-peak agreement with the exact distribution at T = 100
  double worst = 0.0;
  for (long x = -20; x <= 20; x += 2) {
    double exact = point_probability_exact(x, 100, R(0)).to_double();
    double approx = p_star(static_cast<double>(x), 100.0, 0.0);
    worst = std::max(worst, std::abs(exact - approx) / exact);
  }
  CHECK(worst < 0.02);

  // the d=1 comparison also holds through the heat kernel with t -> T/2
  // (lattice cell of the parity sublattice doubles the density)
  std::vector<double> x0{0.0};
  CHECK(2.0 * heat_kernel(50.0, x0) ==
        doctest::Approx(p_star(0.0, 100.0, 0.0)).epsilon(1e-12));

  // d=2 heat-kernel law at T=100 against the factorized exact distribution;
  // the product identity is cross-checked against the convolution at T=6
  auto conv = walk_distribution(2, 6, WeightVector::uniform(4));
  for (const auto& [p, prob] : conv) {
    long u = p.coords[0] + p.coords[1];
    long w = p.coords[0] - p.coords[1];
    CHECK(prob == point_probability_exact(u, 6, R(0)) *
                      point_probability_exact(w, 6, R(0)));
  }
  std::vector<double> origin2{0.0, 0.0};
  double peak2 = 2.0 * heat_kernel(100.0 / 4.0, origin2);
  double worst2 = 0.0;
  for (long a = -10; a <= 10; ++a)
    for (long b = -10; b <= 10; ++b) {
      if (((a + b) & 1L) != 0) continue;
      double exact = (point_probability_exact(a + b, 100, R(0)) *
                      point_probability_exact(a - b, 100, R(0)))
                         .to_double();
      std::vector<double> xy{static_cast<double>(a), static_cast<double>(b)};
      double approx = 2.0 * heat_kernel(100.0 / 4.0, xy);
      worst2 = std::max(worst2, std::abs(exact - approx) / peak2);
    }
  CHECK(worst2 < 0.02);
}

TEST_CASE("finite-difference residual of the gaussian") {
  PdeGrid grid{-30.0, 30.0, 50.0, 150.0, 0.1, 31, 26};
  double r1 = pde_residual(0.0, grid);
  CHECK(r1 < 1e-6);

  grid.h = 0.05;
  double r2 = pde_residual(0.0, grid);
  double order = std::log2(r1 / r2);
  CHECK(order == doctest::Approx(2.0).epsilon(0.15));

  grid.h = 0.1;
  CHECK(pde_residual(0.5, grid) < 1e-6);

  CHECK_THROWS_AS(pde_residual(0.0, PdeGrid{-1.0, 1.0, 0.05, 1.0, 0.1, 11, 11}),
                  DomainError);
}

TEST_CASE("discrete action") {
  // constant-velocity path has zero action
  std::vector<double> straight;
  for (int i = 0; i <= 8; ++i) straight.push_back(0.5 * i);
  auto res = discrete_action(straight, 1.0, 0.5);
  CHECK(res.action == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(res.q == doctest::Approx(1.0));

  // alternating unit steps at v = 0: every term contributes 1
  std::vector<double> zigzag{0, 1, 0, 1, 0};
  auto zig = discrete_action(zigzag, 1.0, 0.0);
  CHECK(zig.action == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(zig.q == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

  // linear interpolation of endpoints: S = u^2 (t_b - t_a) at v = 0
  const double u = 0.4, tb = 10.0;
  std::vector<double> linear;
  for (int i = 0; i <= 10; ++i) linear.push_back(u * i);
  CHECK(discrete_action(linear, 1.0, 0.0).action ==
        doctest::Approx(u * u * tb).epsilon(1e-12));

  // sum and product forms agree
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> step(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> pts{0.0};
    for (int i = 0; i < 6; ++i) pts.push_back(pts.back() + step(rng));
    auto r = discrete_action(pts, 0.5, 0.25);
    CHECK(std::abs(r.q - r.q_product) <= 1e-12 * std::max(1.0, std::abs(r.q)));
  }

  // action vanishes only on constant-velocity paths
  auto bent = discrete_action(std::vector<double>{0.0, 0.5, 0.9}, 1.0, 0.5);
  CHECK(bent.action > 0.0);

  CHECK_THROWS_AS(discrete_action(make_trajectory({0, 1, 3}, {0, 1, 1}), 0.0),
                  DomainError);  // nonuniform spacing
  auto from_traj = discrete_action(make_trajectory({0, 1, 2}, {0, 1, 0}), 0.0);
  CHECK(from_traj.action == doctest::Approx(2.0));
}
