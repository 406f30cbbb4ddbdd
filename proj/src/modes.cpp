#include "kspace/modes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kspace::modes {

MomentumGrid MomentumGrid::build(int N, Boundary bc) {
  if (N < 2 || N % 2 != 0)
    throw std::invalid_argument("momentum grid needs an even site count N >= 2, got " +
                                std::to_string(N));
  MomentumGrid g;
  g.N_ = N;
  g.bc_ = bc;
  g.numer_.reserve(N);
  if (bc == Boundary::antiperiodic) {
    // odd numerators -N+1, -N+3, ..., N-1
    for (int q = -N + 1; q <= N - 1; q += 2) g.numer_.push_back(q);
  } else {
    // even numerators for j = -N/2+1 .. N/2
    for (int j = -N / 2 + 1; j <= N / 2; ++j) g.numer_.push_back(2 * j);
  }
  std::sort(g.numer_.begin(), g.numer_.end());
  g.momenta_.resize(N);
  for (int i = 0; i < N; ++i) g.momenta_[i] = pi * g.numer_[i] / N;
  return g;
}

int MomentumGrid::partner(int i) const {
  if (i < 0 || i >= N_) throw std::out_of_range("mode index out of range");
  if (bc_ == Boundary::antiperiodic) return N_ - 1 - i;
  if (i == N_ - 1) return i;  // k = pi
  return N_ - 2 - i;          // k = 0 sits at N/2-1 and maps to itself
}

int MomentumGrid::index_of(double k, double tol) const {
  for (int i = 0; i < N_; ++i)
    if (std::abs(momenta_[i] - k) <= tol) return i;
  throw std::invalid_argument("momentum " + std::to_string(k) + " is not on the grid");
}

int total_numerator(ModeConfig config, const MomentumGrid& grid) {
  const int N = grid.size();
  long long s = 0;
  for (int i = 0; i < N; ++i)
    if ((config >> i) & 1u) s += grid.numerator(i);
  const long long m = 2 * N;
  long long r = ((s % m) + m) % m;  // [0, 2N)
  if (r > N) r -= m;                // (-N, N]
  return static_cast<int>(r);
}

double total_momentum(ModeConfig config, const MomentumGrid& grid) {
  return pi * total_numerator(config, grid) / grid.size();
}

ModeBlock make_block(const MomentumGrid& grid, Family family, int n, double k_F) {
  const int N = grid.size();
  ModeBlock block;
  block.family = family;

  switch (family) {
    case Family::positive: {
      std::vector<int> cand;
      for (int i = 0; i < N; ++i)
        if (grid.momentum(i) > 0) cand.push_back(i);
      if (n < 1 || n > static_cast<int>(cand.size()))
        throw std::invalid_argument("positive-block size must be in [1, N/2]");
      std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
        double da = std::abs(grid.momentum(a) - k_F);
        double db = std::abs(grid.momentum(b) - k_F);
        if (da != db) return da < db;
        return grid.momentum(a) < grid.momentum(b);
      });
      block.indices.assign(cand.begin(), cand.begin() + n);
      break;
    }
    case Family::pair: {
      if (n != 2) throw std::invalid_argument("pair blocks have size 2");
      int i = grid.index_of(k_F);
      int j = grid.partner(i);
      if (i == j)
        throw std::invalid_argument("momentum is self-paired; no {k, -k} block exists");
      block.indices = {i, j};
      break;
    }
    case Family::energy: {
      if (n < 1 || n > N)
        throw std::invalid_argument("energy-block size must be in [1, N]");
      std::vector<int> cand(N);
      for (int i = 0; i < N; ++i) cand[i] = i;
      std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
        double ka = std::abs(grid.momentum(a));
        double kb = std::abs(grid.momentum(b));
        double da = std::abs(ka - k_F);
        double db = std::abs(kb - k_F);
        if (da != db) return da < db;
        if (ka != kb) return ka < kb;
        return grid.momentum(a) > grid.momentum(b);  // positive sign first
      });
      block.indices.assign(cand.begin(), cand.begin() + n);
      break;
    }
    case Family::custom:
      throw std::invalid_argument("custom blocks are built directly from indices");
  }
  return block;
}

}  // namespace kspace::modes
