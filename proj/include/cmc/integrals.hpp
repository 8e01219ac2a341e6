#pragma once

#include <cmath>

#include "cmc/common.hpp"
#include "cmc/quadrature.hpp"

namespace cmc {

// I_p(r) = integral of sinh^p over [0, r].
//
// Integration by parts gives
//   I_p = cosh(r) sinh^{p-1}(r)/p - (p-1)/p * I_{p-2},
// with I_0 = r and I_1 = cosh(r) - 1. Differentiating the recurrence
// reproduces sinh^p(r), which fixes the exponent of the inner integral
// at p-2 (not p-1).
inline double sinh_power_integral(int p, double r) {
  if (p < 0) throw ParamError("sinh_power_integral: p must be >= 0");
  if (r < 0.0) throw ParamError("sinh_power_integral: r must be >= 0");
  if (r == 0.0) return 0.0;
  double sh = std::sinh(r);
  double ch = std::cosh(r);
  double val = (p % 2 == 0) ? r : ch - 1.0;
  for (int q = (p % 2 == 0) ? 2 : 3; q <= p; q += 2) {
    val = ch * std::pow(sh, q - 1) / q - (q - 1.0) / q * val;
  }
  return val;
}

// Maclaurin branch of I_p(r)/sinh^p(r): r/(p+1) * (1 - p/(p+3) * r^2/3).
// Truncation error is O(r^5).
inline double sinh_power_ratio_series(int p, double r) {
  return r / (p + 1.0) * (1.0 - p / (p + 3.0) * r * r / 3.0);
}

// I_p(r)/sinh^p(r). Three regimes:
//   r < kSeriesSwitch  series branch (the ratio is 0/0 there);
//   r < 1              direct quadrature over the positive integrand divided
//                      by sinh^p -- the normalized recurrence is unstable
//                      below r ~ 1, its error growing by 1/sinh^2 per step;
//   r >= 1             normalized recurrence
//                        u_p = coth(r)/p - (p-1)/p * u_{p-2}/sinh^2(r),
//                      which never forms sinh^p(r) and so survives p*r far
//                      beyond the overflow range of the raw integrals.
inline double sinh_power_ratio(int p, double r) {
  if (p < 0) throw ParamError("sinh_power_ratio: p must be >= 0");
  if (r < 0.0) throw ParamError("sinh_power_ratio: r must be >= 0");
  if (r == 0.0) return 0.0;
  if (r < kSeriesSwitch) return sinh_power_ratio_series(p, r);
  if (p == 0) return r;
  if (r < 1.0) {
    double integral = integrate_gauss64(
        [p](double t) { return std::pow(std::sinh(t), p); }, 0.0, r);
    return integral / std::pow(std::sinh(r), p);
  }
  double sh = std::sinh(r);
  double inv_sh2 = 1.0 / (sh * sh);
  double cot = std::cosh(r) / sh;
  double val = (p % 2 == 0) ? r : std::tanh(0.5 * r);
  for (int q = (p % 2 == 0) ? 2 : 3; q <= p; q += 2) {
    val = cot / q - (q - 1.0) / q * val * inv_sh2;
  }
  return val;
}

// 1 - p * I_p(r)/sinh^p(r), evaluated without cancellation. At large r the
// ratio approaches 1/p to within less than an ulp, so the strict bound of
// the profile function is only certifiable through this gap.
inline double sinh_power_ratio_gap(int p, double r) {
  if (p < 1) throw ParamError("sinh_power_ratio_gap: p must be >= 1");
  if (r < 0.0) throw ParamError("sinh_power_ratio_gap: r must be >= 0");
  if (r == 0.0) return 1.0;
  if (r < kSeriesSwitch) return 1.0 - p * sinh_power_ratio_series(p, r);
  if (p == 1) {
    // 1 - tanh(r/2) = 2/(e^r + 1)
    return 2.0 / (std::exp(r) + 1.0);
  }
  double psmall = 1.0 - p * sinh_power_ratio(p, r);
  // For moderate r the direct difference keeps enough digits; switch to the
  // cancellation-free form once the gap is below ~1e-8.
  if (psmall > 1e-8) return psmall;
  double sh = std::sinh(r);
  return (p - 1.0) * sinh_power_ratio(p - 2, r) / (sh * sh) -
         coth_minus_one(r);
}

}  // namespace cmc
