#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace kspace::modes {

inline constexpr double pi = 3.14159265358979323846;

enum class Boundary { periodic, antiperiodic };

// Single-particle momenta of an N-site ring, sorted ascending in (-pi, pi].
//
// Antiperiodic rings carry k = (2p+1)*pi/N, so neither 0 nor pi is allowed.
// Periodic rings carry k = 2*pi*j/N with j = -N/2+1 .. N/2, which includes both
// 0 and pi. Every momentum is stored with its exact integer numerator
// (k = pi * numer / N); momentum sums are reduced mod 2*pi in integer
// arithmetic, so "total momentum vanishes" is an exact statement.
class MomentumGrid {
public:
  static MomentumGrid build(int N, Boundary bc);

  int size() const { return N_; }
  Boundary boundary() const { return bc_; }
  const Eigen::ArrayXd& momenta() const { return momenta_; }
  double momentum(int i) const { return momenta_[i]; }
  int numerator(int i) const { return numer_[i]; }

  // index of -k; k in {0, pi} maps to itself
  int partner(int i) const;
  bool self_paired(int i) const { return partner(i) == i; }

  // exact grid lookup; throws std::invalid_argument if k is not a grid point
  int index_of(double k, double tol = 1e-9) const;

private:
  int N_ = 0;
  Boundary bc_ = Boundary::antiperiodic;
  Eigen::ArrayXd momenta_;
  std::vector<int> numer_;
};

// Occupation pattern over grid modes, bit j = occupation of grid index j.
using ModeConfig = std::uint64_t;

// Sum of occupied momenta, reduced mod 2*pi into (-pi, pi].
double total_momentum(ModeConfig config, const MomentumGrid& grid);

// Integer numerator of the total momentum, reduced mod 2N into (-N, N].
int total_numerator(ModeConfig config, const MomentumGrid& grid);

enum class Family { positive, pair, energy, custom };

struct ModeBlock {
  Family family = Family::custom;
  std::vector<int> indices;  // distinct grid indices, construction order

  int size() const { return static_cast<int>(indices.size()); }
};

// Block construction used across all scans.
//
//   positive: the n positive momenta closest to +k_F, ties broken by smaller k.
//   pair:     {k, -k} for k = k_F, which must be a non-self-paired grid point
//             (n must be 2).
//   energy:   the n momenta minimizing ||k| - k_F|, ties broken by smaller |k|,
//             then positive sign first. E-blocks are nested: E_n is a prefix of
//             E_{n+1}.
ModeBlock make_block(const MomentumGrid& grid, Family family, int n,
                     double k_F = pi / 2);

}  // namespace kspace::modes
