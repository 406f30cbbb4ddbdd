#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>

namespace kspace {

// Probabilities below this are treated as exact zeros (0 * log 0 = 0 guard).
// Corresponds to singular values below 1e-12.
inline constexpr double probability_floor = 1e-24;

// Binary entropy -x ln x - (1-x) ln(1-x), in nats.
template <class T>
T binary_entropy(T x) {
  T s{};
  if (x > T(0)) s -= x * std::log(x);
  if (x < T(1)) s -= (T(1) - x) * std::log(T(1) - x);
  return s;
}

inline void validate_renyi_order(double alpha) {
  if (alpha == 1.0)
    throw std::invalid_argument("Renyi order 1 is the von Neumann entropy; use that field");
  if (!(alpha > 0.0))
    throw std::invalid_argument("Renyi order must be positive");
}

// Renyi entropy of a two-outcome distribution {x, 1-x}, order alpha > 0, != 1.
template <class T>
T renyi_binary(T x, T alpha) {
  validate_renyi_order(alpha);
  return std::log(std::pow(x, alpha) + std::pow(T(1) - x, alpha)) / (T(1) - alpha);
}

struct EntropyResult {
  double vn = 0.0;                  // von Neumann, nats
  std::map<double, double> renyi;   // order -> S_alpha, nats
  std::size_t schmidt_count = 0;    // singular values above 1e-12
};

inline double entropy_from_probabilities(const Eigen::Ref<const Eigen::ArrayXd>& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > probability_floor) s -= p[i] * std::log(p[i]);
  return s;
}

inline double renyi_from_probabilities(const Eigen::Ref<const Eigen::ArrayXd>& p,
                                       double alpha) {
  validate_renyi_order(alpha);
  double t = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > probability_floor) t += std::pow(p[i], alpha);
  return std::log(t) / (1.0 - alpha);
}

}  // namespace kspace
