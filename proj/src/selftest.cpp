#include "qcomb/selftest.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "qcomb/cyclotomic.hpp"
#include "qcomb/ensembles.hpp"
#include "qcomb/gauge.hpp"
#include "qcomb/invariant_forms.hpp"
#include "qcomb/quantum_walk.hpp"
#include "qcomb/walks.hpp"

namespace qcomb::selftest {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << "FAILED: " << what;
    }
  }
  void note(const std::string& what) {
    if (detail.tellp() > 0) detail << "; ";
    detail << what;
  }
};

// the blocks of the stored vertex numbering, duplicated here so the model is
// checked against an independent copy of the matrix data
constexpr int kX[6][6] = {
    {0, 1, 1, 1, 1, 1}, {1, 0, 1, 0, 0, 1}, {1, 1, 0, 1, 0, 0},
    {1, 0, 1, 0, 1, 0}, {1, 0, 0, 1, 0, 1}, {1, 1, 0, 0, 1, 0},
};
constexpr int kY[6][6] = {
    {0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 1, 1},
    {0, 1, 0, 0, 0, 1}, {0, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0},
};

std::vector<OrbitalMatrix> expected_orbitals() {
  const int n = 12;
  OrbitalMatrix d1(n, std::vector<int>(n, 0)), d2 = d1, d3 = d1, d4 = d1;
  for (int i = 0; i < n; ++i) {
    d1[i][i] = 1;
    d2[i][(i + 6) % n] = 1;
  }
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      d3[i][j] = kX[i][j];
      d3[i][j + 6] = kY[i][j];
      d3[i + 6][j] = kY[i][j];
      d3[i + 6][j + 6] = kX[i][j];
      d4[i][j] = kY[i][j];
      d4[i][j + 6] = kX[i][j];
      d4[i + 6][j] = kX[i][j];
      d4[i + 6][j + 6] = kY[i][j];
    }
  return {d1, d2, d3, d4};
}

Check criterion_cyclotomic() {
  Check c;
  Cyclotomic w = Cyclotomic::make(
      5, {{0, Rational(1)}, {2, Rational(2)}, {3, Rational(2)}});
  c.require(w * w == Cyclotomic::from_rational(Rational(5), 5),
            "(1+2z^2+2z^3)^2 == 5 exactly");
  std::complex<double> z = w.to_complex();
  double target = -std::sqrt(5.0);
  c.require(std::abs(z.real() - target) < 1e-12 && std::abs(z.imag()) < 1e-12,
            "numeric embedding within 1e-12 of -sqrt(5)");
  c.note("value " + std::to_string(z.real()));
  return c;
}

Check criterion_orbitals() {
  Check c;
  const auto& model = icosahedron_model();
  c.require(model.group.order() == 60, "group order 60");
  auto expected = expected_orbitals();
  c.require(model.orbitals->size() == 4, "exactly 4 orbitals");
  for (std::size_t i = 0; i < expected.size() && i < model.orbitals->size(); ++i)
    c.require((*model.orbitals)[i] == expected[i],
              "orbital " + std::to_string(i + 1) + " bit-identical");
  c.require(verify_presentation(model.group, model.gen_a, model.gen_b),
            "presentation a^5 = b^2 = (ab)^3 = id");
  c.require(model.blocks.blocks.size() == 6, "6 blocks");
  for (int i = 0; i < 6; ++i)
    c.require(model.blocks.blocks[i] == std::vector<int>{i, i + 6},
              "block {" + std::to_string(i) + "," + std::to_string(i + 6) + "}");
  return c;
}

Check criterion_form_algebra() {
  Check c;
  const auto& model = icosahedron_model();
  const char* labels[] = {"1", "3", "3'", "5"};
  const int dims[] = {1, 3, 3, 5};
  std::vector<CycMatrix> mats;
  for (const char* l : labels) mats.push_back(model.form(l).matrix());

  CycMatrix sum = cyc_zero_matrix(12, 12);
  for (std::size_t a = 0; a < mats.size(); ++a) {
    c.require(cyc_mat_equal(cyc_mat_mul(mats[a], mats[a]), mats[a]),
              std::string("B_") + labels[a] + " idempotent");
    for (std::size_t b = a + 1; b < mats.size(); ++b) {
      c.require(cyc_mat_equal(cyc_mat_mul(mats[a], mats[b]), cyc_zero_matrix(12, 12)),
                std::string("B_") + labels[a] + " B_" + labels[b] + " == 0");
    }
    auto tr = cyc_mat_trace(mats[a]).rational_part();
    c.require(tr.has_value() && *tr == Rational(dims[a]),
              std::string("trace B_") + labels[a]);
    sum = cyc_mat_add(sum, mats[a]);

    // invariance under all 60 permutations: B[g(i)][g(j)] == B[i][j]
    bool invariant = true;
    for (const auto& g : model.group.elements()) {
      for (int i = 0; i < 12 && invariant; ++i)
        for (int j = 0; j < 12; ++j)
          if (!(mats[a][g(i)][g(j)] == mats[a][i][j])) {
            invariant = false;
            break;
          }
      if (!invariant) break;
    }
    c.require(invariant, std::string("B_") + labels[a] + " G-invariant");
  }
  c.require(cyc_mat_equal(sum, cyc_identity_matrix(12)), "sum of forms == identity");
  return c;
}

Check criterion_born_rationality() {
  Check c;
  const auto& model = icosahedron_model();
  const InvariantForm& b1 = model.form("1");
  const InvariantForm& b5 = model.form("5");
  const InvariantForm& b33 = model.form("3+3'");
  const InvariantForm& b3 = model.form("3");

  std::mt19937_64 rng(20150121);
  std::uniform_int_distribution<int> digit(0, 9);
  auto random_vec = [&](const std::vector<const InvariantForm*>& forms) {
    while (true) {
      NatVector v(12);
      for (auto& x : v) x = digit(rng);
      bool usable = true;
      for (const auto* f : forms)
        if (f->inner(v, v).is_zero()) usable = false;
      if (usable) return v;
    }
  };

  int irrational_b3 = 0;
  bool all_rational = true;
  bool completeness_ok = true;
  std::vector<const InvariantForm*> needed{&b1, &b5, &b33};
  std::vector<InvariantForm> decomposition{model.form("1"), model.form("3"),
                                           model.form("3'"), model.form("5")};
  for (int trial = 0; trial < 1000; ++trial) {
    NatVector m = random_vec(needed);
    NatVector n = random_vec(needed);
    for (const auto* f : needed)
      if (!f->born(m, n).rational_part()) all_rational = false;

    auto res = completeness_check(decomposition, m, n);
    Integer dot(0);
    for (int i = 0; i < 12; ++i) dot += m[i] * n[i];
    if (!(res.total == Cyclotomic::from_rational(Rational(dot))))
      completeness_ok = false;

    if (!b3.inner(m, m).is_zero() && !b3.inner(n, n).is_zero() &&
        !b3.born(m, n).rational_part())
      ++irrational_b3;
  }
  c.require(all_rational, "born probabilities rational under B_1, B_5, B_3+3'");
  c.require(completeness_ok, "completeness totals equal sum m_i n_i");
  c.require(irrational_b3 > 0, "at least one irrational value under B_3 alone");
  c.note("irrational B_3 cases: " + std::to_string(irrational_b3));
  return c;
}

Check criterion_heat_kernel() {
  Check c;
  // relative error at the origin, T = 100
  double exact0 = point_probability_exact(0, 100, Rational(0)).to_double();
  double approx0 = p_star(0.0, 100.0, 0.0);
  double rel0 = std::abs(exact0 - approx0) / exact0;
  c.require(rel0 < 0.005, "relative error at origin < 0.5%");
  c.note("origin rel err " + std::to_string(rel0 * 100.0) + "%");

  double worst = 0.0;
  for (long x = -20; x <= 20; x += 2) {
    double exact = point_probability_exact(x, 100, Rational(0)).to_double();
    double approx = p_star(static_cast<double>(x), 100.0, 0.0);
    worst = std::max(worst, std::abs(exact - approx) / exact);
  }
  c.require(worst < 0.02, "max relative error over |X| <= 20 < 2%");
  c.note("max rel err " + std::to_string(worst * 100.0) + "%");

  for (long t = 0; t <= 8; ++t) {
    long expected = (t + 1) * (2 * (t + 1) * (t + 1) + 1) / 3;
    c.require(walk_macrostate_count(3, t) == expected,
              "octahedral count at T=" + std::to_string(t));
  }
  return c;
}

Check criterion_entropy() {
  Check c;
  const long t = 1000;
  const Rational alphas[] = {Rational(3, 10), Rational(1, 2)};
  for (const Rational& a1 : alphas) {
    Rational a2 = Rational(1) - a1;
    long kstar = (a1 * Rational(t)).numerator().get_si();  // integer by choice of alpha
    double exact = binomial_entropy_exact(kstar, t, a1, a2);
    double star = binomial_entropy_star(static_cast<double>(kstar), t, a1.to_double());
    c.require(std::abs(exact - star) <= 0.01,
              "|S_exact - S*| <= 0.01 at alpha=" + a1.str());
    c.note("alpha=" + a1.str() + " |dS|=" + std::to_string(std::abs(exact - star)));

    long argmax_exact = 0, argmax_star = 0;
    double best_exact = -1e300, best_star = -1e300;
    for (long k = 0; k <= t; ++k) {
      double se = binomial_entropy_exact(k, t, a1, a2);
      if (se > best_exact) {
        best_exact = se;
        argmax_exact = k;
      }
      double ss = binomial_entropy_star(static_cast<double>(k), t, a1.to_double());
      if (ss > best_star) {
        best_star = ss;
        argmax_star = k;
      }
    }
    c.require(std::abs(argmax_exact - argmax_star) <= 1,
              "argmax within 1 at alpha=" + a1.str());
  }
  return c;
}

Check criterion_pde() {
  Check c;
  for (double v : {0.0, 0.5}) {
    PdeGrid grid{-30.0, 30.0, 50.0, 150.0, 0.1, 61, 51};
    double r1 = pde_residual(v, grid);
    grid.h = 0.05;
    double r2 = pde_residual(v, grid);
    double order = std::log2(r1 / r2);
    c.require(r1 < 1e-6, "residual < 1e-6 at v=" + std::to_string(v));
    c.require(std::abs(order - 2.0) <= 0.2, "convergence order 2 +- 0.2");
    char buf[80];
    std::snprintf(buf, sizeof buf, "v=%.1f res=%.2e order=%.4f", v, r1, order);
    c.note(buf);
  }
  return c;
}

Check criterion_least_action() {
  Check c;
  auto maxima = max_probability_trajectories({0, 10, 20, 30, 40}, 0, Rational(0));
  bool has_straight = false;
  bool all_close = true;
  for (const auto& traj : maxima) {
    bool straight = true;
    for (long p : traj.points) {
      if (p != 0) straight = false;
      if (std::abs(p) > 1) all_close = false;
    }
    if (straight) has_straight = true;
  }
  c.require(has_straight, "straight line among maximizers");
  c.require(all_close, "every maximizer within 1 lattice unit per waypoint");
  c.note(std::to_string(maxima.size()) + " maximizer(s) at T=40");

  auto ties = max_probability_trajectories({0, 1, 2}, 0, Rational(0));
  c.require(ties.size() == 2, "two tied maximizers at T=2");
  if (ties.size() == 2)
    c.require(ties[0].points[1] == -1 && ties[1].points[1] == 1,
              "ties are X_1 = -1 and X_1 = +1");
  return c;
}

Check criterion_group_algebra() {
  Check c;
  std::mt19937_64 rng(1913);
  std::uniform_int_distribution<int> digit(1, 9);

  bool oracle_ok = true;
  for (int n = 2; n <= 6 && oracle_ok; ++n) {
    auto group = std::make_shared<const GroupTable>(cyclic_group(n));
    // indices of the rotation powers g^j in the table
    std::vector<int> power_index(n);
    int rot = group->generator_indices()[0];
    int idx = group->identity_index();
    for (int j = 0; j < n; ++j) {
      power_index[j] = idx;
      idx = group->mul(idx, rot);
    }
    for (int trial = 0; trial < 5 && oracle_ok; ++trial) {
      std::vector<Rational> raw(n);
      Rational sum(0);
      for (auto& r : raw) {
        r = Rational(digit(rng));
        sum += r;
      }
      for (auto& r : raw) r /= sum;
      WeightVector alpha{raw};

      std::vector<Rational> weights(n);
      for (int j = 0; j < n; ++j) weights[power_index[j]] = raw[j];
      GroupAlgebraElement a(group, weights);

      for (long t = 1; t <= 10 && oracle_ok; ++t) {
        auto dist = cyclic_macrostate_distribution(n, alpha, t);
        auto powed = a.power(static_cast<unsigned long long>(t));
        for (int m = 0; m < n; ++m)
          if (!(powed.weights()[power_index[m]] == dist[m])) oracle_ok = false;
      }
    }
  }
  c.require(oracle_ok, "ga_power equals the cyclic closed-form oracle exactly");

  // float backend at T = 10^6
  auto t0 = Clock::now();
  auto group6 = std::make_shared<const GroupTable>(cyclic_group(6));
  std::vector<double> w(6, 0.0);
  w[0] = 0.25;
  w[1] = 0.5;
  w[2] = 0.25;
  GroupAlgebraElementF af(group6, w);
  long mults = 0;
  auto big = af.power(1'000'000ULL, &mults);
  double wsum = 0.0;
  for (double x : big.weights()) wsum += x;
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  c.require(mults <= 2 * static_cast<long>(std::ceil(std::log2(1e6))),
            "multiplication count <= 2 ceil(log2 T)");
  c.require(std::abs(wsum - 1.0) < 1e-9, "weights still sum to 1");
  c.require(ms < 1000.0, "float backend power at T=1e6 under 1 s");
  c.note("T=1e6 multiplications: " + std::to_string(mults));
  return c;
}

Check criterion_holonomy() {
  Check c;
  auto a5 = std::make_shared<const GroupTable>(GroupTable::generate(
      5, {Permutation::from_cycles("(1 2 3 4 5)", 5), Permutation::from_cycles("(1 2 3)", 5)}));
  c.require(a5->order() == 60, "A5 order 60");
  UnitaryRep rep = UnitaryRep::permutation(a5);

  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> pick(0, a5->order() - 1);
  auto random_path = [&]() {
    ConnectionPath p{a5, {}};
    for (int i = 0; i < 4; ++i) p.steps.push_back(pick(rng));
    return p;
  };

  int counterexamples = 0;
  int trivial_cases = 0;
  for (int trial = 0; trial < 100; ++trial) {
    ConnectionPath p = random_path();
    // every tenth pair shares the path, pinning the trivial-holonomy branch
    ConnectionPath q = (trial % 10 == 0) ? p : random_path();
    int h = holonomy(p, q);
    if (h == a5->identity_index()) ++trivial_cases;

    bool preserved = true;
    const int dim = rep.dimension();
    std::vector<CycVector> phi(dim), psi(dim);
    for (int i = 0; i < dim; ++i) {
      CycVector e(dim, Cyclotomic());
      e[i] = Cyclotomic::from_rational(Rational(1));
      phi[i] = rep.evolve(q, e);
      psi[i] = rep.evolve(p, e);
    }
    for (int i = 0; i < dim && preserved; ++i)
      for (int j = 0; j < dim; ++j) {
        Cyclotomic want = Cyclotomic::from_rational(Rational(i == j ? 1 : 0));
        if (!(cyc_inner(phi[i], psi[j]) == want)) {
          preserved = false;
          break;
        }
      }
    if (preserved != (h == a5->identity_index())) ++counterexamples;
  }
  c.require(counterexamples == 0, "preservation iff trivial holonomy");
  c.require(trivial_cases >= 10, "trivial-holonomy branch exercised");
  c.note(std::to_string(trivial_cases) + " trivial holonomies in 100 pairs");
  return c;
}

Check criterion_hamiltonian() {
  Check c;
  const double two_pi = 2.0 * std::numbers::pi;
  for (int n : {2, 3, 5}) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    CMatrix u = permutation_matrix_complex(Permutation(img));
    auto res = hamiltonian_of(u);
    c.require(res.order == n, "detected order " + std::to_string(n));
    double worst = 0.0;
    for (double e : res.energies) {
      double k = std::round(e * n / two_pi);
      worst = std::max(worst, std::abs(e - k * two_pi / n));
    }
    c.require(worst < 1e-9, "eigenvalues on 2 pi k / n within 1e-9");

    CMatrix back = hermitian_exp_minus_i(res.hamiltonian);
    double diff = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) diff = std::max(diff, std::abs(back[i][j] - u[i][j]));
    c.require(diff < 1e-10, "exp(-iH) reproduces U within 1e-10");
  }
  return c;
}

Check criterion_quantum_walk() {
  Check c;
  // T = 3 Hadamard distribution from |0> tensor |dir0>
  auto state = qw_evolve(WalkState::basis(64, 2, 0, 0), hadamard_coin(), 3);
  auto signed_dist = qw_signed_distribution(state);
  auto prob_at = [&](long x) {
    for (const auto& [pos, p] : signed_dist)
      if (pos == x) return p;
    return 0.0;
  };
  c.require(std::abs(prob_at(-3) - 0.125) < 1e-12, "P(-3) = 1/8");
  c.require(std::abs(prob_at(-1) - 0.125) < 1e-12, "P(-1) = 1/8");
  c.require(std::abs(prob_at(1) - 0.625) < 1e-12, "P(1) = 5/8");
  c.require(std::abs(prob_at(3) - 0.125) < 1e-12, "P(3) = 1/8");

  CoinOperator g2 = grover_coin(2);
  c.require(g2.at(0, 0) == 0.0 && g2.at(1, 1) == 0.0 && g2.at(0, 1) == 1.0 &&
                g2.at(1, 0) == 1.0,
            "Grover coin k=2 equals Pauli-X exactly");

  auto drift_state = qw_evolve(WalkState::basis(256, 2, 0, 0), hadamard_coin(), 1000);
  c.require(std::abs(drift_state.norm() - 1.0) < 1e-10, "norm drift < 1e-10 over 1000 steps");

  auto spread = qw_evolve(WalkState::basis(512, 2, 0, 0), hadamard_coin(), 100);
  auto [mean, sigma] = qw_position_moments(spread);
  c.require(sigma / 10.0 > 2.0, "ballistic spread: sigma(100)/sqrt(100) > 2");
  c.note("sigma(100) = " + std::to_string(sigma));
  return c;
}

struct Criterion {
  int number;
  const char* name;
  Check (*fn)();
  double time_limit_ms;  // 0 = no per-criterion limit
};

const Criterion kCriteria[] = {
    {1, "cyclotomic square identity", criterion_cyclotomic, 1.0},
    {2, "icosahedron orbital reproduction", criterion_orbitals, 1000.0},
    {3, "invariant form algebra", criterion_form_algebra, 5000.0},
    {4, "Born rationality", criterion_born_rationality, 10000.0},
    {5, "heat-kernel limit", criterion_heat_kernel, 5000.0},
    {6, "entropy approximation", criterion_entropy, 1000.0},
    {7, "PDE residual of the Gaussian", criterion_pde, 2000.0},
    {8, "least action / straight lines", criterion_least_action, 10000.0},
    {9, "group-algebra evolution", criterion_group_algebra, 0.0},
    {10, "holonomy invariance", criterion_holonomy, 0.0},
    {11, "Hamiltonian spectrum", criterion_hamiltonian, 0.0},
    {12, "quantum walk", criterion_quantum_walk, 0.0},
};

}  // namespace

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> results;
  for (const auto& crit : kCriteria) {
    auto t0 = Clock::now();
    Check check;
    try {
      check = crit.fn();
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail << "exception: " << e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    bool pass = check.ok;
    std::string detail = check.detail.str();
    if (crit.time_limit_ms > 0 && ms > crit.time_limit_ms) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    results.push_back({crit.number, crit.name, pass, detail, ms});
  }
  return results;
}

int run_and_report(std::ostream& out) {
  auto results = run_all();
  int failures = 0;
  double total_ms = 0.0;
  for (const auto& r : results) {
    total_ms += r.elapsed_ms;
    if (!r.pass) ++failures;
    char ms_buf[32];
    std::snprintf(ms_buf, sizeof ms_buf, "%.1f", r.elapsed_ms);
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.number << ". " << r.name << " ("
        << ms_buf << " ms)";
    if (!r.detail.empty()) out << " -- " << r.detail;
    out << "\n";
  }
  char total_buf[32];
  std::snprintf(total_buf, sizeof total_buf, "%.1f", total_ms / 1000.0);
  out << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
      << results.size() - failures << "/" << results.size() << " in " << total_buf
      << " s)\n";
  if (total_ms > 60000.0) {
    out << "[FAIL] total runtime exceeded 60 s\n";
    ++failures;
  }
  return failures;
}

}  // namespace qcomb::selftest
