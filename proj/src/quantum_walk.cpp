#include "qcomb/quantum_walk.hpp"

#include <algorithm>
#include <cmath>

namespace qcomb {

CoinOperator grover_coin(int k) {
  if (k < 2) throw DomainError("Grover coin needs k >= 2");
  CoinOperator c{k, std::vector<Amplitude>(static_cast<std::size_t>(k) * k)};
  const double off = 2.0 / k;
  for (int r = 0; r < k; ++r)
    for (int col = 0; col < k; ++col)
      c.entries[static_cast<std::size_t>(r) * k + col] = (r == col) ? off - 1.0 : off;
  return c;
}

CoinOperator hadamard_coin() {
  const double s = 1.0 / std::sqrt(2.0);
  return CoinOperator{2, {s, s, s, -s}};
}

double unitarity_residual(const CoinOperator& c) {
  double worst = 0.0;
  for (int i = 0; i < c.dim; ++i)
    for (int j = 0; j < c.dim; ++j) {
      Amplitude acc = 0.0;
      for (int l = 0; l < c.dim; ++l) acc += std::conj(c.at(l, i)) * c.at(l, j);
      worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

WalkState::WalkState(int sites, int coin_dim, std::vector<Amplitude> amplitudes)
    : sites_(sites), coin_dim_(coin_dim), amp_(std::move(amplitudes)) {
  if (sites_ < 1 || coin_dim_ < 1) throw DomainError("empty walk space");
  if (amp_.size() != static_cast<std::size_t>(sites_) * coin_dim_)
    throw DimensionMismatchError("amplitude count mismatch");
  if (std::abs(norm() - 1.0) > 1e-9) throw DomainError("state is not normalized");
}

WalkState WalkState::basis(int sites, int coin_dim, int site, int direction) {
  if (site < 0 || site >= sites || direction < 0 || direction >= coin_dim)
    throw DomainError("basis index out of range");
  std::vector<Amplitude> amp(static_cast<std::size_t>(sites) * coin_dim, 0.0);
  amp[static_cast<std::size_t>(site) * coin_dim + direction] = 1.0;
  return WalkState(sites, coin_dim, std::move(amp));
}

WalkState WalkState::localized(int sites, int coin_dim, int site,
                               std::span<const Amplitude> coin_state) {
  if (static_cast<int>(coin_state.size()) != coin_dim)
    throw DimensionMismatchError("coin state dimension mismatch");
  std::vector<Amplitude> amp(static_cast<std::size_t>(sites) * coin_dim, 0.0);
  for (int d = 0; d < coin_dim; ++d)
    amp[static_cast<std::size_t>(site) * coin_dim + d] = coin_state[d];
  return WalkState(sites, coin_dim, std::move(amp));
}

double WalkState::norm() const {
  double acc = 0.0;
  for (const auto& a : amp_) acc += std::norm(a);
  return std::sqrt(acc);
}

WalkState qw_step(const WalkState& state, const CoinOperator& coin) {
  const int n = state.sites();
  const int k = state.coin_dim();
  if (coin.dim != k) throw DimensionMismatchError("coin dimension mismatch");
  if (k > 2 && (k % 2) != 0)
    throw DomainError("cycle walks support k = 2 or even k with self-loops");

  // per-site coin application; no cross-site accumulation within a step
  std::vector<Amplitude> coined(state.amplitudes().size(), 0.0);
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < k; ++r) {
      Amplitude acc = 0.0;
      for (int c = 0; c < k; ++c) acc += coin.at(r, c) * state.amplitude(s, c);
      coined[static_cast<std::size_t>(s) * k + r] = acc;
    }

  // conditional shift: dir 0 -> +1, dir 1 -> -1, further directions rest
  std::vector<Amplitude> shifted(coined.size(), 0.0);
  for (int s = 0; s < n; ++s)
    for (int d = 0; d < k; ++d) {
      int target = s;
      if (d == 0)
        target = (s + 1) % n;
      else if (d == 1)
        target = (s - 1 + n) % n;
      shifted[static_cast<std::size_t>(target) * k + d] =
          coined[static_cast<std::size_t>(s) * k + d];
    }
  return WalkState(n, k, std::move(shifted));
}

WalkState qw_evolve(WalkState state, const CoinOperator& coin, long steps) {
  if (steps < 0) throw DomainError("negative step count");
  for (long i = 0; i < steps; ++i) state = qw_step(state, coin);
  return state;
}

std::vector<double> qw_distribution(const WalkState& state) {
  std::vector<double> out(state.sites(), 0.0);
  for (int s = 0; s < state.sites(); ++s)
    for (int d = 0; d < state.coin_dim(); ++d) out[s] += std::norm(state.amplitude(s, d));
  return out;
}

std::vector<std::pair<long, double>> qw_signed_distribution(const WalkState& state) {
  auto dist = qw_distribution(state);
  const long n = state.sites();
  std::vector<std::pair<long, double>> out;
  for (long s = 0; s < n; ++s) {
    long x = s <= n / 2 ? s : s - n;
    out.emplace_back(x, dist[s]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<double, double> qw_position_moments(const WalkState& state) {
  auto signed_dist = qw_signed_distribution(state);
  double mean = 0.0;
  for (const auto& [x, p] : signed_dist) mean += static_cast<double>(x) * p;
  double var = 0.0;
  for (const auto& [x, p] : signed_dist) {
    double dev = static_cast<double>(x) - mean;
    var += dev * dev * p;
  }
  return {mean, std::sqrt(var)};
}

}  // namespace qcomb
