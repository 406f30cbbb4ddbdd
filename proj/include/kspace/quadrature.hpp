#pragma once

#include <array>
#include <cmath>

namespace kspace {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // accumulated |K15 - G7| estimate
  int evaluations = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (positive half).
inline constexpr std::array<double, 8> k15_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> k15_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> g7_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace detail

// Adaptive bisection with a G7/K15 error estimate per panel. The tolerance is
// split across subintervals, so the accumulated error is bounded by abs_tol.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol = 1e-10,
                           int max_depth = 40) {
  QuadratureResult total;
  struct Frame {
    double a, b, tol;
    int depth;
  };
  std::array<Frame, 2048> stack;
  int top = 0;
  stack[top++] = {a, b, abs_tol, 0};
  while (top > 0) {
    Frame fr = stack[--top];
    const double c = 0.5 * (fr.a + fr.b);
    const double h = 0.5 * (fr.b - fr.a);
    double k15 = 0.0, g7 = 0.0;
    for (int i = 0; i < 8; ++i) {
      double fv;
      if (i == 7) {
        fv = f(c);
        k15 += detail::k15_weights[i] * fv;
        g7 += detail::g7_weights[3] * fv;
      } else {
        fv = f(c - h * detail::k15_nodes[i]) + f(c + h * detail::k15_nodes[i]);
        k15 += detail::k15_weights[i] * fv;
        if (i % 2 == 1) g7 += detail::g7_weights[i / 2] * fv;
      }
    }
    total.evaluations += 15;
    const double value = h * k15;
    const double err = h * std::abs(k15 - g7);
    if (err <= fr.tol || fr.depth >= max_depth || top > static_cast<int>(stack.size()) - 4) {
      total.value += value;
      total.error += err;
    } else {
      stack[top++] = {fr.a, c, 0.5 * fr.tol, fr.depth + 1};
      stack[top++] = {c, fr.b, 0.5 * fr.tol, fr.depth + 1};
    }
  }
  return total;
}

}  // namespace kspace
