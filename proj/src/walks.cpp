#include "qcomb/walks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcomb {

namespace {

void check_segment(long dx, long dt) {
  if (dt <= 0) throw LightConeError("times must be strictly increasing");
  if (std::abs(dx) > dt) throw LightConeError("segment violates the light cone");
  if (((dx - dt) & 1L) != 0) throw LightConeError("segment violates parity");
}

}  // namespace

Trajectory make_trajectory(std::vector<long> times, std::vector<long> points) {
  if (times.size() != points.size() || times.size() < 2)
    throw DomainError("trajectory needs matching times and points, length >= 2");
  if (times.front() != 0 || points.front() != 0)
    throw DomainError("trajectory must start at (0, 0)");
  for (std::size_t i = 1; i < times.size(); ++i)
    check_segment(points[i] - points[i - 1], times[i] - times[i - 1]);
  return Trajectory{std::move(times), std::move(points)};
}

std::map<LatticePoint, Rational> walk_distribution(int d, long t, const WeightVector& alpha) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  if (t < 0) throw DomainError("step count must be >= 0");
  if (alpha.size() != 2 * d)
    throw DimensionMismatchError("need 2d step weights");

  std::map<LatticePoint, Rational> dist;
  dist[LatticePoint{std::vector<int>(d, 0)}] = Rational(1);
  for (long step = 0; step < t; ++step) {
    std::map<LatticePoint, Rational> next;
    for (const auto& [pt, p] : dist) {
      for (int dir = 0; dir < 2 * d; ++dir) {
        if (alpha[dir].is_zero()) continue;
        LatticePoint q = pt;
        q.coords[dir % d] += dir < d ? 1 : -1;
        next[q] += p * alpha[dir];
      }
    }
    dist = std::move(next);
  }
  return dist;
}

long walk_macrostate_count(int d, long t) {
  if (d < 1 || t < 0) throw DomainError("bad walk parameters");
  // displacements x with |x|_1 <= t and |x|_1 = t (mod 2)
  long count = 0;
  std::vector<int> x(d, 0);
  // enumerate the box [-t, t]^d
  std::vector<long> idx(d, -t);
  while (true) {
    long l1 = 0;
    for (long c : idx) l1 += std::abs(c);
    if (l1 <= t && ((l1 - t) & 1L) == 0) ++count;
    int k = d - 1;
    while (k >= 0 && idx[k] == t) idx[k--] = -t;
    if (k < 0) break;
    ++idx[k];
  }
  return count;
}

Rational point_probability_exact(long x, long t, const Rational& v) {
  if (t < 0) throw DomainError("negative time");
  if (rational_abs(v) > Rational(1)) throw DomainError("|v| must be <= 1");
  if (t == 0) {
    if (x != 0) throw LightConeError("t = 0 only reaches x = 0");
    return Rational(1);
  }
  check_segment(x, t);
  unsigned long up = static_cast<unsigned long>((t + x) / 2);
  unsigned long down = static_cast<unsigned long>((t - x) / 2);
  Rational plus = (Rational(1) + v) / Rational(2);
  Rational minus = (Rational(1) - v) / Rational(2);
  return Rational(binomial(t, static_cast<long>(up))) *
         rational_pow(plus, up) * rational_pow(minus, down);
}

double point_probability(long x, long t, double v) {
  if (t < 0) throw DomainError("negative time");
  if (std::abs(v) > 1.0) throw DomainError("|v| must be <= 1");
  if (t == 0) {
    if (x != 0) throw LightConeError("t = 0 only reaches x = 0");
    return 1.0;
  }
  check_segment(x, t);
  const long up = (t + x) / 2, down = (t - x) / 2;
  const double pp = (1.0 + v) / 2.0, pm = (1.0 - v) / 2.0;
  if (up > 0 && pp == 0.0) return 0.0;
  if (down > 0 && pm == 0.0) return 0.0;
  double ln = log_integer(binomial(t, up));
  if (up > 0) ln += up * std::log(pp);
  if (down > 0) ln += down * std::log(pm);
  return std::exp(ln);
}

Rational trajectory_probability_exact(const Trajectory& traj, const Rational& v) {
  const long t = traj.times.back();
  const long x = traj.points.back();
  Rational endpoint = point_probability_exact(x, t, v);
  if (endpoint.is_zero()) throw DomainError("endpoint has zero probability");
  Rational prod(1);
  for (std::size_t i = 1; i < traj.times.size(); ++i)
    prod *= point_probability_exact(traj.points[i] - traj.points[i - 1],
                                    traj.times[i] - traj.times[i - 1], v);
  return prod / endpoint;
}

double trajectory_probability(const Trajectory& traj, double v) {
  Rational rv(0);
  // exact path for dyadic v, float fallback otherwise
  double scaled = v * (1L << 30);
  if (std::abs(scaled - std::round(scaled)) < 1e-9) {
    rv = Rational(static_cast<long>(std::llround(scaled)), 1L << 30);
    return trajectory_probability_exact(traj, rv).to_double();
  }
  const long t = traj.times.back();
  const long x = traj.points.back();
  double endpoint = point_probability(x, t, v);
  if (endpoint == 0.0) throw DomainError("endpoint has zero probability");
  double prod = 1.0;
  for (std::size_t i = 1; i < traj.times.size(); ++i)
    prod *= point_probability(traj.points[i] - traj.points[i - 1],
                              traj.times[i] - traj.times[i - 1], v);
  return prod / endpoint;
}

std::vector<Trajectory> max_probability_trajectories(const std::vector<long>& tau, long x,
                                                     const Rational& v, double state_cap) {
  if (tau.size() < 2 || tau.front() != 0)
    throw DomainError("tau must start at 0 and contain at least two times");
  for (std::size_t i = 1; i < tau.size(); ++i)
    if (tau[i] <= tau[i - 1]) throw DomainError("tau must be strictly increasing");
  const long t = tau.back();
  check_segment(x, t);
  if (point_probability_exact(x, t, v).is_zero())
    throw DomainError("endpoint has zero probability");

  const std::size_t n = tau.size();
  // admissible window at each waypoint: inside both light cones
  std::vector<std::vector<long>> windows(n);
  double states = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const long ti = tau[i];
    for (long xi = -ti; xi <= ti; ++xi) {
      if (((xi - ti) & 1L) != 0) continue;
      if (std::abs(x - xi) > t - ti) continue;
      windows[i].push_back(xi);
    }
    states *= static_cast<double>(windows[i].size());
    if (states > state_cap) throw CapExceededError("trajectory search space exceeds cap");
  }

  // forward pass: best product of segment probabilities, all predecessors kept
  std::vector<std::map<long, Rational>> best(n);
  std::vector<std::map<long, std::vector<long>>> pred(n);
  best[0][0] = Rational(1);
  for (std::size_t i = 1; i < n; ++i) {
    const long dt = tau[i] - tau[i - 1];
    for (long xi : windows[i]) {
      Rational best_p(0);
      std::vector<long> best_from;
      for (const auto& [xp, p] : best[i - 1]) {
        if (std::abs(xi - xp) > dt) continue;
        Rational cand = p * point_probability_exact(xi - xp, dt, v);
        if (cand.is_zero()) continue;
        if (cand > best_p) {
          best_p = cand;
          best_from = {xp};
        } else if (cand == best_p) {
          best_from.push_back(xp);
        }
      }
      if (!best_from.empty()) {
        best[i][xi] = best_p;
        pred[i][xi] = std::move(best_from);
      }
    }
  }
  if (!best[n - 1].count(x)) throw DomainError("no admissible trajectory");

  // backtrack every maximizing waypoint sequence
  std::vector<Trajectory> result;
  std::vector<long> chain{x};
  auto dfs = [&](auto&& self, std::size_t level, long at) -> void {
    if (level == 0) {
      std::vector<long> pts(chain.rbegin(), chain.rend());
      result.push_back(Trajectory{tau, std::move(pts)});
      return;
    }
    for (long from : pred[level].at(at)) {
      chain.push_back(from);
      self(self, level - 1, from);
      chain.pop_back();
    }
  };
  dfs(dfs, n - 1, x);
  std::sort(result.begin(), result.end(),
            [](const Trajectory& a, const Trajectory& b) { return a.points < b.points; });
  return result;
}

double heat_kernel(double t, std::span<const double> x) {
  if (!(t > 0.0)) throw DomainError("heat kernel needs t > 0");
  const std::size_t d = x.size();
  double sq = 0.0;
  for (double xi : x) sq += xi * xi;
  return std::pow(4.0 * std::numbers::pi * t, -static_cast<double>(d) / 2.0) *
         std::exp(-sq / (4.0 * t));
}

double p_star(double x, double t, double v) {
  if (!(t > 0.0)) throw DomainError("p_star needs t > 0");
  if (!(std::abs(v) < 1.0)) throw DomainError("p_star needs |v| < 1");
  const double s = 1.0 - v * v;
  const double dev = (x - v * t);
  return std::sqrt(2.0 / (std::numbers::pi * s * t)) *
         std::exp(-dev * dev / (2.0 * t * s));
}

double pde_residual(double v, const PdeGrid& grid) {
  if (grid.nx < 2 || grid.nt < 2 || !(grid.h > 0.0))
    throw DomainError("degenerate grid");
  if (!(grid.t_min - grid.h > 0.0))
    throw DomainError("grid must stay inside t > 0");
  if (!(std::abs(v) < 1.0)) throw DomainError("need |v| < 1");

  const double half = (1.0 - v * v) / 2.0;
  const double dx = (grid.x_max - grid.x_min) / (grid.nx - 1);
  const double dt = (grid.t_max - grid.t_min) / (grid.nt - 1);
  double worst = 0.0;
  for (int it = 0; it < grid.nt; ++it) {
    const double t = grid.t_min + it * dt;
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double x = grid.x_min + ix * dx;
      const double h = grid.h;
      const double pt = (p_star(x, t + h, v) - p_star(x, t - h, v)) / (2.0 * h);
      const double px = (p_star(x + h, t, v) - p_star(x - h, t, v)) / (2.0 * h);
      const double pxx = (p_star(x + h, t, v) - 2.0 * p_star(x, t, v) +
                          p_star(x - h, t, v)) / (h * h);
      worst = std::max(worst, std::abs(pt + v * px - half * pxx));
    }
  }
  return worst;
}

DiscreteAction discrete_action(std::span<const double> points, double dt, double v) {
  if (points.size() < 2) throw DomainError("need at least one segment");
  if (!(dt > 0.0)) throw DomainError("time step must be positive");
  if (!(std::abs(v) < 1.0)) throw DomainError("need |v| < 1");
  const double s = std::sqrt(1.0 - v * v);
  double action = 0.0;
  double q_prod = 1.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double dxi = points[i] - points[i - 1];
    const double term = (dxi / dt - v) / s;
    action += term * term * dt;
    const double pterm = (dxi - v * dt) / s;
    q_prod *= std::exp(-pterm * pterm / (2.0 * dt));
  }
  return DiscreteAction{action, std::exp(-action / 2.0), q_prod};
}

DiscreteAction discrete_action(const Trajectory& traj, double v) {
  const long dt = traj.times[1] - traj.times[0];
  for (std::size_t i = 1; i < traj.times.size(); ++i)
    if (traj.times[i] - traj.times[i - 1] != dt)
      throw DomainError("trajectory times must be uniformly spaced");
  std::vector<double> pts(traj.points.begin(), traj.points.end());
  return discrete_action(pts, static_cast<double>(dt), v);
}

}  // namespace qcomb
