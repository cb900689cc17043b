#pragma once

#include <map>
#include <span>
#include <vector>

#include "qcomb/ensembles.hpp"
#include "qcomb/rational.hpp"

namespace qcomb {

/// Point of the integer lattice Z^d.
struct LatticePoint {
  std::vector<int> coords;
  auto operator<=>(const LatticePoint&) const = default;
};

/// One-dimensional lattice path through waypoints (T_i, X_i), T_0 = 0,
/// X_0 = 0. Each segment satisfies |dX| <= dT and dX = dT (mod 2).
struct Trajectory {
  std::vector<long> times;
  std::vector<long> points;
};

/// Validates the waypoint constraints; throws LightConeError.
Trajectory make_trajectory(std::vector<long> times, std::vector<long> points);

/// Exact position distribution after t steps of the walk on Z^d whose 2d
/// step weights are alpha (first d positive directions, then d negative).
std::map<LatticePoint, Rational> walk_distribution(int d, long t, const WeightVector& alpha);

/// Number of distinct displacement classes reachable in exactly t steps.
long walk_macrostate_count(int d, long t);

/// Endpoint probability C(T,(T+X)/2) ((1+v)/2)^((T+X)/2) ((1-v)/2)^((T-X)/2).
Rational point_probability_exact(long x, long t, const Rational& v);
double point_probability(long x, long t, double v);

/// Conditional probability of passing through the trajectory's interior
/// waypoints given its endpoints.
Rational trajectory_probability_exact(const Trajectory& traj, const Rational& v);
double trajectory_probability(const Trajectory& traj, double v);

/// All trajectories through times tau (tau[0] = 0) from 0 to x of maximum
/// conditional probability. Ties are all reported. Exact arithmetic.
std::vector<Trajectory> max_probability_trajectories(const std::vector<long>& tau, long x,
                                                     const Rational& v,
                                                     double state_cap = 1e7);

/// Gaussian heat kernel (4 pi t)^(-d/2) exp(-|x|^2 / (4t)), d = x.size().
double heat_kernel(double t, std::span<const double> x);

/// Drifted Gaussian approximation of the walk's position distribution.
double p_star(double x, double t, double v);

struct PdeGrid {
  double x_min, x_max;
  double t_min, t_max;
  double h;          // finite-difference stencil spacing
  int nx = 121;      // sample points across x
  int nt = 101;      // sample points across t
};

/// Max |dP/dt + v dP/dx - ((1-v^2)/2) d2P/dx2| of p_star over the grid,
/// by second-order central differences with spacing h.
double pde_residual(double v, const PdeGrid& grid);

struct DiscreteAction {
  double action;     // S = sum ((dx/dt - v)/sqrt(1-v^2))^2 dt
  double q;          // exp(-S/2)
  double q_product;  // the same quantity as a product over segments
};

/// Discrete action of a uniformly-spaced path (real-valued points allowed).
DiscreteAction discrete_action(std::span<const double> points, double dt, double v);
DiscreteAction discrete_action(const Trajectory& traj, double v);

}  // namespace qcomb
