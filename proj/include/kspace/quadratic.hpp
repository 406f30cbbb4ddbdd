#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

#include "kspace/entropy.hpp"
#include "kspace/modes.hpp"

namespace kspace::xy {

// H = -J sum_l sigma^z_l
//     - 1/2 sum_l [ (1+gamma)/2 sigma^x_l sigma^x_{l+1}
//                 + (1-gamma)/2 sigma^y_l sigma^y_{l+1} ]
// after the fermion mapping; gamma = 1 is the transverse-field Ising chain.
struct Model {
  double J = 0.0;
  double gamma = 1.0;
};

// Per-mode pairing data: A = J - cos k, B = -gamma sin k, E = sqrt(A^2 + B^2),
// u^2 = (1 + A/E)/2, v^2 = 1 - u^2. n_f is the fermion number sum(v^2).
struct Solution {
  modes::MomentumGrid grid;
  Eigen::ArrayXd A, B, E, u2, v2;
  double n_f = 0.0;
};

Solution bogoliubov(const Model& model, const modes::MomentumGrid& grid);

// Occupations theta_j of the quasiparticle modes. Entropies below assume the
// even sector (theta symmetric under k -> -k); the ground state is all zeros.
struct ThetaState {
  std::vector<std::uint8_t> theta;
  bool even = true;

  static ThetaState ground(int N) { return {std::vector<std::uint8_t>(N, 0), true}; }
};

// Block entropy of an even eigenstate. A (k, -k) pair split by the block edge
// contributes H2(lambda) with lambda = u^2 theta_k + v^2 (1 - theta_{-k});
// pairs fully inside (or outside) contribute nothing, and so do the
// self-paired momenta k in {0, pi} where the pairing term vanishes.
EntropyResult block_entropy(const Solution& sol, const ThetaState& theta,
                            const modes::ModeBlock& block,
                            std::span<const double> alphas = {});

// Entropy carried by one broken (k, -k) pair of the Ising ground state.
double pair_entropy(double k, double J);

// s_N(J) = S(P_{N/2}) / N for the Ising chain on the antiperiodic grid.
double half_block_entropy(double J, int N);
double finite_entropy_per_site(double J, int N);

// N -> infinity limit of S(P_{N/2})/N: (1/2pi) integral of H2(u^2(k)) over
// (0, pi). Equals ln 2 - 1/2 for gamma = 1, J <= 1. Quadrature error <= 1e-8.
double thermo_entropy_per_site(double J, double gamma);

// Smallest-momentum mode singled out, remainder integrated:
// H2(u^2(pi/N)) + (N/2pi) integral_{2pi/N}^{pi} H2(u^2(phi)) dphi, gamma = 1.
double single_mode_approx(double J, int N);

struct CollapsePoint {
  int N = 0;
  double J = 0.0;
  double jtilde = 0.0;  // N (J - 1)
  double stilde = 0.0;  // s_N(J) - thermo_entropy_per_site(J, 1)
};

// Finite-size collapse table, one row per (N, J), sorted by (N, J). The
// subtraction uses the thermodynamic value at the same J; for J <= 1 that is
// the constant ln 2 - 1/2.
std::vector<CollapsePoint> scaling_collapse(std::span<const int> Ns,
                                            std::span<const double> Js);

}  // namespace kspace::xy
