#pragma once

#include <Eigen/Core>

#include <optional>

namespace kspace {

enum class BasisKind { position, momentum, intermediate };

// Full 2^N amplitude vector over occupation words. Bit j of a word is the
// occupation of site j+1 (position basis, site 1 = least significant bit) or of
// grid mode j (momentum basis). States with fixed particle number carry the
// sector count; amplitudes outside the sector are exact zeros.
struct ManyBodyState {
  int N = 0;
  BasisKind basis = BasisKind::position;
  Eigen::VectorXcd amplitudes;
  std::optional<int> sector;

  double norm() const { return amplitudes.norm(); }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes.size()); }
};

}  // namespace kspace
