#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kspace/state.hpp"

namespace kspace::ed {

// Fixed-particle-number occupation basis: all N-bit words of the given
// popcount, ascending. index() is the combinadic rank, the exact inverse of
// states[], computed without a lookup table scan.
class SectorBasis {
public:
  static SectorBasis build(int N, int n_particles);

  int sites() const { return N_; }
  int particles() const { return n_; }
  std::size_t size() const { return states_.size(); }
  std::uint32_t word(std::size_t i) const { return states_[i]; }
  const std::vector<std::uint32_t>& words() const { return states_; }
  std::size_t index(std::uint32_t word) const;

private:
  int N_ = 0, n_ = 0;
  std::vector<std::uint32_t> states_;
  std::vector<std::vector<std::uint64_t>> binom_;  // binom_[n][k]
};

// Fermionized XXZ ring at half filling with an antiperiodic boundary:
//
//   H = -1/2 sum_x (c+_x c_{x+1} + h.c.) + Delta sum_x n_x n_{x+1},
//   c+_{N+1} = -c+_1.
//
// Site 1 is the least significant bit and the fermionic ordering is the site
// order, so bulk hops carry no string sign and the wrap hop carries
// (-1) * (-1)^(n_2 + ... + n_{N-1}). The boundary sign can be placed on any
// bond (a gauge choice); moving it must not change the spectrum, which the
// tests use as a consistency probe of the string bookkeeping.
class Hamiltonian {
public:
  Hamiltonian(int N, double delta, int twist_bond = 0 /* 0 = wrap bond N */);

  int sites() const { return N_; }
  double delta() const { return delta_; }
  const SectorBasis& basis() const { return basis_; }

  void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  double diagonal(std::uint32_t word) const;
  Eigen::MatrixXd dense() const;  // sector dimension <= 3500

private:
  int N_ = 0;
  double delta_ = 0.0;
  int twist_ = 0;  // bond index 1..N carrying the boundary sign
  SectorBasis basis_;
};

enum class Method { lanczos, dense };

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXd vector;  // sector amplitudes, first nonzero entry positive
  double residual = 0.0;   // ||Hv - Ev||
  double gap = 0.0;        // E1 - E0 estimate
  int iterations = 0;
  bool low_gap = false;    // gap < 1e-8; downstream entropies unreliable
};

struct DegenerateGroundState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lowest eigenpair of H. Refuses N = 2 mod 4, where the half-filled ground
// state is exactly twofold degenerate for every Delta. Deterministic for a
// fixed (method, tol, seed).
GroundState ground_state(const Hamiltonian& H, Method method = Method::lanczos,
                         double tol = 1e-10, std::uint64_t seed = 1);

// (|101010...> + |010101...>)/sqrt(2) over position words, pattern starting
// with site 1 occupied.
ManyBodyState neel_state(int N);

// Embed sector amplitudes into a full 2^N vector.
ManyBodyState embed(const SectorBasis& basis, const Eigen::VectorXd& sector_amps,
                    BasisKind kind = BasisKind::position);

// One-body correlations <c+_x c_y> of a sector state, x, y = 1..N.
// Row x-1, column y-1; includes the Jordan-Wigner string signs.
Eigen::MatrixXd one_body_matrix(const SectorBasis& basis,
                                const Eigen::VectorXd& sector_amps);

}  // namespace kspace::ed
