#pragma once

#include <cmath>

#include "cmc/ball.hpp"
#include "cmc/common.hpp"
#include "cmc/integrals.hpp"
#include "cmc/quadrature.hpp"

namespace cmc {

// Parameters of the explicit radial CMC graph family. c_div is the constant
// of the divergence-form operator, i.e. m<H,nu>; the norm convention
// ||H|| = |c_div|/m is derived (c_norm below). The branch sign selects the
// sign choice in w = +-sqrt(1-y^2)/y, which negates the profile.
struct ProfileParams {
  int m;
  double c_div;
  Signature signature = Signature::riemannian;
  Branch branch = Branch::plus;

  ProfileParams(int m_, double c_div_,
                Signature sig = Signature::riemannian,
                Branch br = Branch::plus)
      : m(m_), c_div(c_div_), signature(sig), branch(br) {
    if (m < 2) throw ParamError("ProfileParams: m must be >= 2");
    if (signature == Signature::riemannian &&
        std::fabs(c_div) > m - 1.0) {
      throw ParamError(
          "ProfileParams: riemannian signature requires c in [1-m, m-1]");
    }
  }

  double c_norm() const { return std::fabs(c_div) / m; }
  double c_eff() const { return sign_of(branch) * c_div; }
};

struct RadialProfileEval {
  double r;
  double I;  // I_{m-1}(r)
  double u;
  double w;
  double phi;
  double w_prime;
};

// u(r) = I_{m-1}(r)/sinh^{m-1}(r), the regular-at-origin solution of
// u' = 1 - (m-1) coth(r) u.
inline double u_profile(int m, double r) {
  if (m < 2) throw ParamError("u_profile: m must be >= 2");
  return sinh_power_ratio(m - 1, r);
}

// Series branch of u, truncation O(r^5).
inline double u_series(int m, double r) {
  return r / m * (1.0 - (m - 1.0) / (m + 2.0) * r * r / 3.0);
}

// 1 - (m-1) u(r) > 0, computed without cancellation; certifies the strict
// sup bound u < 1/(m-1) at radii where u itself rounds to the bound.
inline double u_bound_gap(int m, double r) {
  return sinh_power_ratio_gap(m - 1, r);
}

// u'(r) = 1 - (m-1) coth(r) u(r), in the cancellation-free form
//   u' = (1 - (m-1)u) - (m-1)(coth r - 1)u.
inline double u_profile_prime(int m, double r) {
  if (r < kSeriesSwitch) {
    return 1.0 / m * (1.0 - (m - 1.0) / (m + 2.0) * r * r);
  }
  return u_bound_gap(m, r) - (m - 1.0) * coth_minus_one(r) * u_profile(m, r);
}

namespace detail {

// A(r) = c_eff * u(r), the normalized flux through the geodesic sphere.
inline double profile_a(const ProfileParams& p, double r) {
  return p.c_eff() * u_profile(p.m, r);
}

inline double profile_a_prime(const ProfileParams& p, double r) {
  return p.c_eff() * u_profile_prime(p.m, r);
}

}  // namespace detail

// Slope w(r) = phi'(r):
//   riemannian:  w = A/sqrt(1 - A^2)  (requires |A| < 1, i.e. |c| <= m-1)
//   lorentzian:  w = A/sqrt(1 + A^2)  (|w| < 1 automatically: spacelike)
inline double w_profile(const ProfileParams& p, double r) {
  double a = detail::profile_a(p, r);
  if (p.signature == Signature::riemannian) {
    return a / std::sqrt(1.0 - a * a);
  }
  return a / std::sqrt(1.0 + a * a);
}

// w'(r) = A'(r)/(1 -+ A^2)^{3/2}, chain rule through the linear equation.
inline double w_profile_prime(const ProfileParams& p, double r) {
  double a = detail::profile_a(p, r);
  double ap = detail::profile_a_prime(p, r);
  double q = (p.signature == Signature::riemannian) ? 1.0 - a * a
                                                    : 1.0 + a * a;
  return ap / (q * std::sqrt(q));
}

// Height phi(r) = integral of w over [0, r]. Series branch below the switch
// (the O(r^6) tail is ~1e-12 there); Gauss-Legendre otherwise, so the value
// is a smooth function of r and can sit under FD stencils.
inline double phi_profile(const ProfileParams& p, double r) {
  if (r < 0.0) throw ParamError("phi_profile: r must be >= 0");
  double sig = (p.signature == Signature::riemannian) ? 1.0 : -1.0;
  double c = p.c_eff();
  double m = p.m;
  if (r < kSeriesSwitch) {
    double r2 = r * r;
    double c4 = c / m * (sig * c * c / (2.0 * m * m) -
                         (m - 1.0) / (3.0 * (m + 2.0)));
    return c / m * r2 / 2.0 + c4 * r2 * r2 / 4.0;
  }
  return integrate_gauss64([&](double s) { return w_profile(p, s); }, 0.0, r);
}

// Same integral by the library's adaptive Simpson; used as the default for
// one-off evaluations and cross-checked against the Gauss path in tests.
inline double phi_profile_adaptive(const ProfileParams& p, double r,
                                   double quad_tol = kQuadTol) {
  if (r < kSeriesSwitch) return phi_profile(p, r);
  return integrate_adaptive([&](double s) { return w_profile(p, s); }, 0.0, r,
                            quad_tol);
}

// f_c(x) = phi(r(x)); smooth through the origin via the series branch.
inline double graph_value(const ProfileParams& p, const BallPoint& x) {
  return phi_profile(p, radial_distance(x));
}

// Residual of the nonlinear slope equation
//   w' = c (1 +- w^2)^{3/2} - (m-1) coth(r) w (1 +- w^2),
// normalized by the magnitude of its terms: where |w| grows like 1/gap the
// raw residual scale exceeds what doubles can cancel, so the residual is
// reported relative to max(1, |terms|).
inline double ode_residual(const ProfileParams& p, double r) {
  if (r <= 0.0) throw ParamError("ode_residual: r must be > 0");
  double w = w_profile(p, r);
  double wp = w_profile_prime(p, r);
  double sig = (p.signature == Signature::riemannian) ? 1.0 : -1.0;
  double q = 1.0 + sig * w * w;
  double t1 = p.c_eff() * q * std::sqrt(q);
  double t2 = (p.m - 1.0) / std::tanh(r) * w * q;
  double scale = std::max({1.0, std::fabs(t1), std::fabs(t2), std::fabs(wp)});
  return (wp - (t1 - t2)) / scale;
}

inline RadialProfileEval evaluate_profile(const ProfileParams& p, double r) {
  RadialProfileEval e;
  e.r = r;
  e.I = sinh_power_integral(p.m - 1, r);
  e.u = u_profile(p.m, r);
  e.w = w_profile(p, r);
  e.phi = phi_profile(p, r);
  e.w_prime = w_profile_prime(p, r);
  return e;
}

}  // namespace cmc
