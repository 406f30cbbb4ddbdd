#include "kspace/ed.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <random>
#include <string>

namespace kspace::ed {

namespace {

int popcount(std::uint32_t w) { return std::popcount(w); }

// uniform double in [0, 1) from the top 53 bits, identical on any platform
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SectorBasis SectorBasis::build(int N, int n_particles) {
  if (N < 1 || N > 24) throw std::invalid_argument("site count must be in [1, 24]");
  if (n_particles < 0 || n_particles > N)
    throw std::invalid_argument("particle count must be in [0, N]");

  SectorBasis b;
  b.N_ = N;
  b.n_ = n_particles;
  b.binom_.assign(N + 1, std::vector<std::uint64_t>(N + 1, 0));
  for (int n = 0; n <= N; ++n) {
    b.binom_[n][0] = 1;
    for (int k = 1; k <= n; ++k)
      b.binom_[n][k] = b.binom_[n - 1][k - 1] + (k <= n - 1 ? b.binom_[n - 1][k] : 0);
  }

  b.states_.reserve(b.binom_[N][n_particles]);
  if (n_particles == 0) {
    b.states_.push_back(0);
    return b;
  }
  // Gosper's hack walks same-popcount words in ascending order
  std::uint32_t w = (1u << n_particles) - 1;
  const std::uint32_t limit = (N == 32) ? 0xffffffffu : (1u << N);
  while (w < limit) {
    b.states_.push_back(w);
    std::uint32_t c = w & (~w + 1);
    std::uint32_t r = w + c;
    w = (((r ^ w) >> 2) / c) | r;
    if (c == 0) break;
  }
  return b;
}

std::size_t SectorBasis::index(std::uint32_t word) const {
  if (popcount(word) != n_)
    throw std::invalid_argument("word has the wrong particle number for this sector");
  // combinadic rank: sum of C(bit position, running count)
  std::size_t rank = 0;
  int seen = 0;
  std::uint32_t w = word;
  while (w) {
    int bpos = std::countr_zero(w);
    ++seen;
    if (bpos >= seen) rank += binom_[bpos][seen];
    w &= w - 1;
  }
  return rank;
}

Hamiltonian::Hamiltonian(int N, double delta, int twist_bond)
    : N_(N), delta_(delta), twist_(twist_bond == 0 ? N : twist_bond),
      basis_(SectorBasis::build(N, N / 2)) {
  if (N < 4 || N % 2 != 0)
    throw std::invalid_argument("the half-filled ring needs an even N >= 4");
  if (twist_ < 1 || twist_ > N)
    throw std::invalid_argument("twist bond must be one of 1..N");
}

double Hamiltonian::diagonal(std::uint32_t word) const {
  int pairs = 0;
  for (int x = 0; x < N_; ++x) {
    const int y = (x + 1) % N_;
    if (((word >> x) & 1u) && ((word >> y) & 1u)) ++pairs;
  }
  return delta_ * pairs;
}

void Hamiltonian::apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
  const auto dim = static_cast<Eigen::Index>(basis_.size());
  if (x.size() != dim) throw std::invalid_argument("vector size does not match sector");
  y.resize(dim);

  const std::uint32_t wrap_mask = 1u | (1u << (N_ - 1));
  const std::uint32_t string_mask =
      ((N_ >= 3) ? ((1u << (N_ - 1)) - 1u) & ~1u : 0u);  // bits 1..N-2

  for (Eigen::Index a = 0; a < dim; ++a) {
    const std::uint32_t w = basis_.word(a);
    double acc = delta_ != 0.0 ? diagonal(w) * x[a] : 0.0;
    // bonds (b, b+1), b = 1..N-1; bond b is twisted when b == twist_
    for (int b = 1; b < N_; ++b) {
      const std::uint32_t m = 3u << (b - 1);
      const std::uint32_t bits = w & m;
      if (bits == 0 || bits == m) continue;
      const double amp = (b == twist_) ? 0.5 : -0.5;
      acc += amp * x[basis_.index(w ^ m)];
    }
    // wrap bond (N, 1) with the Jordan-Wigner string over sites 2..N-1
    {
      const std::uint32_t bits = w & wrap_mask;
      if (bits != 0 && bits != wrap_mask) {
        const int str = popcount(w & string_mask);
        double amp = (str & 1) ? 0.5 : -0.5;
        if (twist_ == N_) amp = -amp;
        acc += amp * x[basis_.index(w ^ wrap_mask)];
      }
    }
    y[a] = acc;
  }
}

Eigen::VectorXd Hamiltonian::apply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y;
  apply(x, y);
  return y;
}

Eigen::MatrixXd Hamiltonian::dense() const {
  const auto dim = static_cast<Eigen::Index>(basis_.size());
  if (dim > 3500)
    throw std::invalid_argument("dense form limited to sector dimensions <= 3500");
  Eigen::MatrixXd H(dim, dim);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(dim), col;
  for (Eigen::Index j = 0; j < dim; ++j) {
    e[j] = 1.0;
    apply(e, col);
    H.col(j) = col;
    e[j] = 0.0;
  }
  return H;
}

namespace {

void fix_sign(Eigen::VectorXd& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

GroundState dense_ground(const Hamiltonian& H) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.dense());
  GroundState g;
  g.energy = es.eigenvalues()[0];
  g.vector = es.eigenvectors().col(0);
  fix_sign(g.vector);
  g.residual = (H.apply(g.vector) - g.energy * g.vector).norm();
  g.gap = es.eigenvalues()[1] - es.eigenvalues()[0];
  g.iterations = 1;
  g.low_gap = g.gap < 1e-8;
  return g;
}

GroundState lanczos_ground(const Hamiltonian& H, double tol, std::uint64_t seed) {
  const auto dim = static_cast<Eigen::Index>(H.basis().size());
  const int max_iter = static_cast<int>(std::min<Eigen::Index>(dim, 500));

  std::mt19937_64 rng(seed);
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = uniform01(rng) - 0.5;
  v.normalize();

  std::vector<Eigen::VectorXd> V;
  V.reserve(max_iter);
  V.push_back(v);

  std::vector<double> alpha, beta;  // tridiagonal T
  Eigen::VectorXd w;
  double theta0 = 0.0, theta1 = 0.0;
  Eigen::VectorXd ritz0;

  for (int j = 0; j < max_iter; ++j) {
    H.apply(V[j], w);
    const double a = V[j].dot(w);
    alpha.push_back(a);
    w -= a * V[j];
    if (j > 0) w -= beta[j - 1] * V[j - 1];
    // full reorthogonalization, two passes
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : V) w -= q.dot(w) * q;

    const int m = j + 1;
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    theta0 = es.eigenvalues()[0];
    theta1 = m > 1 ? es.eigenvalues()[1] : theta0;
    ritz0 = es.eigenvectors().col(0);

    const double b = w.norm();
    const double bound = b * std::abs(ritz0[m - 1]);
    if ((bound <= 0.1 * tol && m > 2) || b < 1e-14 || j == max_iter - 1) {
      Eigen::VectorXd gs = Eigen::VectorXd::Zero(dim);
      for (int i = 0; i < m; ++i) gs += ritz0[i] * V[i];
      gs.normalize();
      fix_sign(gs);
      const double resid = (H.apply(gs) - theta0 * gs).norm();
      if (resid <= tol || b < 1e-14) {
        GroundState g;
        g.energy = theta0;
        g.vector = std::move(gs);
        g.residual = resid;
        g.gap = theta1 - theta0;
        g.iterations = m;
        g.low_gap = g.gap < 1e-8;
        return g;
      }
      if (j == max_iter - 1)
        throw SolverError("no convergence after " + std::to_string(m) +
                          " iterations; residual " + std::to_string(resid) +
                          " above tolerance " + std::to_string(tol));
    }
    beta.push_back(b);
    V.push_back(w / b);
  }
  throw SolverError("iteration limit reached");
}

}  // namespace

GroundState ground_state(const Hamiltonian& H, Method method, double tol,
                         std::uint64_t seed) {
  if (H.sites() % 4 == 2)
    throw DegenerateGroundState(
        "the half-filled ground state on an antiperiodic ring is exactly twofold "
        "degenerate when N = 2 mod 4 for every Delta; use N divisible by 4");
  return method == Method::dense ? dense_ground(H) : lanczos_ground(H, tol, seed);
}

ManyBodyState neel_state(int N) {
  if (N < 2 || N % 2 != 0) throw std::invalid_argument("alternating state needs even N");
  if (N > 22) throw std::invalid_argument("full amplitude vectors limited to N <= 22");
  ManyBodyState s;
  s.N = N;
  s.basis = BasisKind::position;
  s.sector = N / 2;
  s.amplitudes = Eigen::VectorXcd::Zero(std::int64_t(1) << N);
  std::uint32_t odd_sites = 0, even_sites = 0;
  for (int b = 0; b < N; b += 2) odd_sites |= 1u << b;
  for (int b = 1; b < N; b += 2) even_sites |= 1u << b;
  const double r = 1.0 / std::sqrt(2.0);
  s.amplitudes[odd_sites] = r;
  s.amplitudes[even_sites] = r;
  return s;
}

ManyBodyState embed(const SectorBasis& basis, const Eigen::VectorXd& sector_amps,
                    BasisKind kind) {
  if (sector_amps.size() != static_cast<Eigen::Index>(basis.size()))
    throw std::invalid_argument("amplitude count does not match sector size");
  if (basis.sites() > 22)
    throw std::invalid_argument("full amplitude vectors limited to N <= 22");
  ManyBodyState s;
  s.N = basis.sites();
  s.basis = kind;
  s.sector = basis.particles();
  s.amplitudes = Eigen::VectorXcd::Zero(std::int64_t(1) << s.N);
  for (std::size_t i = 0; i < basis.size(); ++i)
    s.amplitudes[basis.word(i)] = sector_amps[static_cast<Eigen::Index>(i)];
  return s;
}

Eigen::MatrixXd one_body_matrix(const SectorBasis& basis,
                                const Eigen::VectorXd& amps) {
  const int N = basis.sites();
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(N, N);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double a = amps[static_cast<Eigen::Index>(i)];
    if (a == 0.0) continue;
    const std::uint32_t w = basis.word(i);
    for (int bx = 0; bx < N; ++bx)
      if ((w >> bx) & 1u) G(bx, bx) += a * a;
    for (int by = 0; by < N; ++by) {
      if (!((w >> by) & 1u)) continue;
      const int sy = popcount(w & ((1u << by) - 1u));
      const std::uint32_t w1 = w ^ (1u << by);
      for (int bx = 0; bx < N; ++bx) {
        if (bx == by || ((w1 >> bx) & 1u)) continue;
        const int sx = popcount(w1 & ((1u << bx) - 1u));
        const std::uint32_t w2 = w1 | (1u << bx);
        const double sign = ((sx + sy) & 1) ? -1.0 : 1.0;
        G(bx, by) += sign * amps[static_cast<Eigen::Index>(basis.index(w2))] * a;
      }
    }
  }
  return G;
}

}  // namespace kspace::ed
