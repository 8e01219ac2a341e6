#pragma once

// Test-side oracles, written independently of the library so the two
// implementations can check each other. Quadrature here is a composite
// Boole rule with interval doubling; the library uses adaptive Simpson
// and Gauss-Legendre.

#include <cmath>
#include <functional>

namespace oracle {

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-13) {
  double prev = 0.0;
  bool have_prev = false;
  for (long n = 8; n <= (1L << 22); n *= 2) {
    double h = (b - a) / n;
    double sum = 0.0;
    for (long i = 0; i < n; ++i) {
      double x0 = a + i * h;
      sum += h / 90.0 *
             (7.0 * f(x0) + 32.0 * f(x0 + 0.25 * h) + 12.0 * f(x0 + 0.5 * h) +
              32.0 * f(x0 + 0.75 * h) + 7.0 * f(x0 + h));
    }
    if (have_prev &&
        std::fabs(sum - prev) <= tol * std::max(1.0, std::fabs(sum))) {
      return sum;
    }
    prev = sum;
    have_prev = true;
  }
  return prev;
}

inline double sinh_power_integral(int p, double r) {
  return integrate([p](double t) { return std::pow(std::sinh(t), p); }, 0.0,
                   r);
}

inline double diff(const std::function<double(double)>& f, double x,
                   double h = 1e-5) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracle
