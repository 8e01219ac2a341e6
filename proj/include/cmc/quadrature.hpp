#pragma once

#include <array>
#include <cmath>

#include "cmc/common.hpp"

namespace cmc {

namespace detail {

template <typename F>
double simpson_step(const F& f, double a, double b, double fa, double fm,
                    double fb, double whole, double tol, int depth,
                    long& evals, long cap) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  evals += 2;
  double h = b - a;
  double left = h / 12.0 * (fa + 4.0 * flm + fm);
  double right = h / 12.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || evals > cap || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, evals,
                      cap) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1,
                      evals, cap);
}

// Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton iteration
// on P_n (three-term recurrence).
template <int N>
struct GaussRule {
  std::array<double, N> x{};
  std::array<double, N> w{};
  GaussRule() {
    constexpr double pi = 3.14159265358979323846;
    for (int i = 0; i < N; ++i) {
      double t = std::cos(pi * (i + 0.75) / (N + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= N; ++k) {
          double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = N * (t * p1 - p0) / (t * t - 1.0);
        double dt = p1 / dp;
        t -= dt;
        if (std::fabs(dt) < 1e-16) break;
      }
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= N; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = N * (t * p1 - p0) / (t * t - 1.0);
      x[i] = t;
      w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

}  // namespace detail

// Adaptive Simpson with mixed absolute/relative tolerance; subdivision is
// capped at ~10^6 evaluations.
template <typename F>
double integrate_adaptive(const F& f, double a, double b,
                          double tol = kQuadTol) {
  if (a == b) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double eff = tol * std::max(1.0, std::fabs(whole));
  long evals = 3;
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, eff, 48, evals,
                              1000000L);
}

// 64-node Gauss-Legendre on [a, b]. For analytic integrands this is accurate
// to machine precision and, unlike adaptive subdivision, the result is a
// smooth function of the endpoints, so it can sit under FD stencils.
template <typename F>
double integrate_gauss64(const F& f, double a, double b) {
  static const detail::GaussRule<64> rule;
  double c = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 64; ++i) s += rule.w[i] * f(c + h * rule.x[i]);
  return s * h;
}

}  // namespace cmc
