#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qcomb/errors.hpp"

namespace qcomb {

using Amplitude = std::complex<double>;

/// k x k unitary coin matrix, row-major.
struct CoinOperator {
  int dim;
  std::vector<Amplitude> entries;
  Amplitude at(int r, int c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }
};

/// Grover diffusion coin 2|psi><psi| - I with |psi> uniform; diagonal
/// 2/k - 1, off-diagonal 2/k. Coincides with Pauli-X at k = 2.
CoinOperator grover_coin(int k);

/// (1/sqrt 2) [[1, 1], [1, -1]].
CoinOperator hadamard_coin();

double unitarity_residual(const CoinOperator& c);

/**
 * State of a coined walk on the cycle Z_N: one amplitude per (site,
 * direction). Shift convention: direction 0 moves +1, direction 1 moves -1;
 * for even coin dimension k > 2 the extra directions are self-loops.
 */
class WalkState {
 public:
  WalkState(int sites, int coin_dim, std::vector<Amplitude> amplitudes);

  /// |site> tensor |direction>.
  static WalkState basis(int sites, int coin_dim, int site, int direction);

  /// Walker localized at a site with the given (normalized) coin state.
  static WalkState localized(int sites, int coin_dim, int site,
                             std::span<const Amplitude> coin_state);

  int sites() const { return sites_; }
  int coin_dim() const { return coin_dim_; }
  Amplitude amplitude(int site, int direction) const {
    return amp_[static_cast<std::size_t>(site) * coin_dim_ + direction];
  }
  const std::vector<Amplitude>& amplitudes() const { return amp_; }
  double norm() const;

 private:
  int sites_;
  int coin_dim_;
  std::vector<Amplitude> amp_;
};

/// One step U = S (1 tensor C): coin on every site, then conditional shift.
WalkState qw_step(const WalkState& state, const CoinOperator& coin);

WalkState qw_evolve(WalkState state, const CoinOperator& coin, long steps);

/// Per-site probabilities (sum over directions of |amplitude|^2).
std::vector<double> qw_distribution(const WalkState& state);

/// (displacement, probability) with sites mapped to signed displacements in
/// (-N/2, N/2]; for wraparound-free runs this is the line distribution.
std::vector<std::pair<long, double>> qw_signed_distribution(const WalkState& state);

/// Mean and standard deviation of the signed position.
std::pair<double, double> qw_position_moments(const WalkState& state);

}  // namespace qcomb
