#include "kspace/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "kspace/quadrature.hpp"

namespace kspace::xy {

namespace {

double u2_at(double J, double gamma, double k) {
  const double A = J - std::cos(k);
  const double B = -gamma * std::sin(k);
  const double E = std::hypot(A, B);
  if (E == 0.0) {
    // degenerate critical mode; the limit of neighboring parameters
    if (A > 0.0) return 1.0;
    if (A < 0.0) return 0.0;
    return 0.5;
  }
  return 0.5 * (1.0 + A / E);
}

}  // namespace

Solution bogoliubov(const Model& model, const modes::MomentumGrid& grid) {
  const int N = grid.size();
  Solution sol{grid, {}, {}, {}, {}, {}, 0.0};
  sol.A = model.J - grid.momenta().cos();
  sol.B = -model.gamma * grid.momenta().sin();
  sol.E = (sol.A.square() + sol.B.square()).sqrt();
  sol.u2.resize(N);
  for (int i = 0; i < N; ++i) sol.u2[i] = u2_at(model.J, model.gamma, grid.momentum(i));
  sol.v2 = 1.0 - sol.u2;
  sol.n_f = sol.v2.sum();
  return sol;
}

EntropyResult block_entropy(const Solution& sol, const ThetaState& theta,
                            const modes::ModeBlock& block,
                            std::span<const double> alphas) {
  const int N = sol.grid.size();
  if (static_cast<int>(theta.theta.size()) != N)
    throw std::invalid_argument("theta state size does not match the grid");
  if (theta.even) {
    for (int i = 0; i < N; ++i)
      if (theta.theta[i] != theta.theta[sol.grid.partner(i)])
        throw std::invalid_argument("theta state flagged even but not symmetric in k");
  }
  for (double a : alphas) validate_renyi_order(a);

  std::vector<char> in_block(N, 0);
  for (int i : block.indices) {
    if (i < 0 || i >= N) throw std::invalid_argument("block index out of range");
    if (in_block[i]) throw std::invalid_argument("block indices must be distinct");
    in_block[i] = 1;
  }

  EntropyResult result;
  result.schmidt_count = 1;
  for (double a : alphas) result.renyi[a] = 0.0;

  for (int i : block.indices) {
    const int j = sol.grid.partner(i);
    if (j == i) continue;       // k in {0, pi}: no pairing, no entropy
    if (in_block[j]) continue;  // pair fully inside the block
    const double lam =
        sol.u2[i] * theta.theta[i] + sol.v2[i] * (1.0 - theta.theta[j]);
    result.vn += binary_entropy(lam);
    for (double a : alphas)
      result.renyi[a] += renyi_binary(lam, a);
    std::size_t branches = 0;
    if (lam > probability_floor) ++branches;
    if (1.0 - lam > probability_floor) ++branches;
    result.schmidt_count *= branches;
  }
  return result;
}

double pair_entropy(double k, double J) {
  if (!(k > 0.0 && k < modes::pi))
    throw std::invalid_argument("pair momentum must lie in (0, pi)");
  return binary_entropy(u2_at(J, 1.0, k));
}

double half_block_entropy(double J, int N) {
  const auto grid = modes::MomentumGrid::build(N, modes::Boundary::antiperiodic);
  double s = 0.0;
  for (int i = 0; i < N; ++i)
    if (grid.momentum(i) > 0) s += binary_entropy(u2_at(J, 1.0, grid.momentum(i)));
  return s;
}

double finite_entropy_per_site(double J, int N) {
  return half_block_entropy(J, N) / N;
}

double thermo_entropy_per_site(double J, double gamma) {
  auto f = [&](double k) { return binary_entropy(u2_at(J, gamma, k)); };
  const auto q = integrate(f, 0.0, modes::pi, 1e-10);
  return q.value / (2.0 * modes::pi);
}

double single_mode_approx(double J, int N) {
  if (N < 2 || N % 2 != 0)
    throw std::invalid_argument("single-mode approximation needs even N");
  auto f = [&](double k) { return binary_entropy(u2_at(J, 1.0, k)); };
  const double lead = binary_entropy(u2_at(J, 1.0, modes::pi / N));
  const auto q = integrate(f, 2.0 * modes::pi / N, modes::pi, 1e-10);
  return lead + N / (2.0 * modes::pi) * q.value;
}

std::vector<CollapsePoint> scaling_collapse(std::span<const int> Ns,
                                            std::span<const double> Js) {
  std::vector<int> ns(Ns.begin(), Ns.end());
  std::vector<double> js(Js.begin(), Js.end());
  std::sort(ns.begin(), ns.end());
  std::sort(js.begin(), js.end());

  std::map<double, double> thermo;  // J -> s_inf(J), shared across sizes
  for (double J : js) thermo.emplace(J, thermo_entropy_per_site(J, 1.0));

  std::vector<CollapsePoint> table;
  table.reserve(ns.size() * js.size());
  for (int N : ns) {
    if (N < 2 || N % 2 != 0)
      throw std::invalid_argument("collapse sizes must be even");
    for (double J : js)
      table.push_back({N, J, N * (J - 1.0),
                       finite_entropy_per_site(J, N) - thermo.at(J)});
  }
  return table;
}

}  // namespace kspace::xy
