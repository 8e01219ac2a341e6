#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "cmc/ball.hpp"
#include "cmc/common.hpp"
#include "cmc/profile.hpp"

namespace cmc {

// Scalar graph function on a base domain. gradient is optional; when absent
// all consumers fall back to central differences of value.
struct GraphField {
  int m;
  Base base;
  Signature signature;
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;  // may be empty
  std::string family;
};

struct CurvatureSample {
  Vec x;
  double grad_norm;   // ||grad f||_g
  double b_eig;       // largest eigenvalue of f*h = ||grad f||^2
  double b_grad;      // ||grad f||
  double mc_scalar;   // m<H,nu> = div_g(grad f / sqrt(1 +- ||grad f||^2))
  double h_norm;      // ||H|| = |mc_scalar|/m
  double hess_norm;   // ||Hess f||_g
};

namespace detail {

inline double metric_factor(const Vec& p, Base base) {
  return base == Base::hyperbolic_ball ? conformal_factor(p) : 1.0;
}

inline Vec coordinate_gradient(const GraphField& f, const Vec& p, double h) {
  int m = f.m;
  Vec g(m);
  Vec q = p;
  for (int i = 0; i < m; ++i) {
    q[i] = p[i] + h;
    double fp = f.value(q);
    q[i] = p[i] - h;
    double fm = f.value(q);
    q[i] = p[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

inline Vec field_gradient(const GraphField& f, const Vec& p, double h) {
  return f.gradient ? f.gradient(p) : coordinate_gradient(f, p, h);
}

// ||grad f||_g from coordinate partials.
inline double grad_g_norm(const Vec& dg, const Vec& p, Base base) {
  return euclid_norm(dg) / metric_factor(p, base);
}

inline void check_inside(const GraphField& f, const Vec& p, double h) {
  if (f.base == Base::hyperbolic_ball) {
    if (euclid_norm(p) + h >= 1.0 - kBoundaryMargin) {
      throw DomainError("evaluation stencil leaves the ball margin");
    }
  }
}

}  // namespace detail

inline double default_fd_step(const GraphField& f, const Vec& x) {
  // Coordinate derivatives of radial quantities pick up one factor of the
  // conformal factor ~ 1/(1-|x|) per order; the 3/4 power balances that
  // growth against roundoff in the nested-difference path.
  double s = f.base == Base::hyperbolic_ball ? 1.0 - euclid_norm(x) : 1.0;
  return f.gradient ? kFdStep * s : kFdStepNested * std::pow(s, 0.75);
}

// m<H,nu> = div_g(grad f / sqrt(1 + ||grad f||^2))   (riemannian)
//         = div_g(grad f / sqrt(1 - ||grad f||^2))   (lorentzian, Eq. of
// the spacelike normal). The spacelike guard runs at every stencil point.
inline double mean_curvature_scalar(const GraphField& f, const Vec& x,
                                    double h_fd = 0.0) {
  int m = f.m;
  double h = h_fd > 0.0 ? h_fd : default_fd_step(f, x);
  detail::check_inside(f, x, 2.0 * h);
  bool lorentz = f.signature == Signature::lorentzian;
  // Coordinate components of grad f / sqrt(1 +- ||grad f||^2), with the
  // index raised by g^{ii} = lambda^{-2}.
  auto X = [&](const Vec& p) -> Vec {
    Vec dg = detail::field_gradient(f, p, h);
    double lam = detail::metric_factor(p, f.base);
    double gn = euclid_norm(dg) / lam;
    if (lorentz && gn >= 1.0 - kSpacelikeEps) {
      throw SpacelikeError("mean_curvature_scalar: ||grad f|| >= 1");
    }
    double denom =
        std::sqrt(lorentz ? 1.0 - gn * gn : 1.0 + gn * gn) * lam * lam;
    for (double& c : dg) c /= denom;
    return dg;
  };
  double lam0 = detail::metric_factor(x, f.base);
  double sum = 0.0;
  Vec p = x;
  for (int i = 0; i < m; ++i) {
    p[i] = x[i] + h;
    double fp = std::pow(detail::metric_factor(p, f.base), m) * X(p)[i];
    p[i] = x[i] - h;
    double fm = std::pow(detail::metric_factor(p, f.base), m) * X(p)[i];
    p[i] = x[i];
    sum += (fp - fm) / (2.0 * h);
  }
  return sum / std::pow(lam0, m);
}

// Covariant Hessian of the field at x (coordinate components); plain second
// partials on a euclidean base.
inline std::vector<Vec> field_hessian(const GraphField& f, const Vec& x,
                                      double h_fd = 0.0) {
  int m = f.m;
  double scale =
      f.base == Base::hyperbolic_ball ? 1.0 - euclid_norm(x) : 1.0;
  double h = h_fd > 0.0
                 ? h_fd
                 : (f.gradient ? kFdStep * scale
                               : kFdStepNested * std::pow(scale, 0.75));
  detail::check_inside(f, x, 2.0 * h);
  std::vector<Vec> hess(m, Vec(m, 0.0));
  Vec grad(m);
  if (f.gradient) {
    // One FD level over the analytic gradient.
    grad = f.gradient(x);
    Vec p = x;
    for (int i = 0; i < m; ++i) {
      p[i] = x[i] + h;
      Vec gp = f.gradient(p);
      p[i] = x[i] - h;
      Vec gm = f.gradient(p);
      p[i] = x[i];
      for (int j = 0; j < m; ++j) {
        hess[i][j] += 0.5 * (gp[j] - gm[j]) / (2.0 * h);
        hess[j][i] += 0.5 * (gp[j] - gm[j]) / (2.0 * h);
      }
    }
  } else {
    double f0 = f.value(x);
    Vec p = x;
    for (int i = 0; i < m; ++i) {
      p[i] = x[i] + h;
      double fp = f.value(p);
      p[i] = x[i] - h;
      double fm = f.value(p);
      p[i] = x[i];
      grad[i] = (fp - fm) / (2.0 * h);
      hess[i][i] = (fp - 2.0 * f0 + fm) / (h * h);
    }
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        p = x;
        p[i] += h;
        p[j] += h;
        double fpp = f.value(p);
        p[j] -= 2.0 * h;
        double fpm = f.value(p);
        p[i] -= 2.0 * h;
        double fmm = f.value(p);
        p[j] += 2.0 * h;
        double fmp = f.value(p);
        hess[i][j] = hess[j][i] = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
      }
    }
  }
  if (f.base == Base::hyperbolic_ball) {
    Christoffel gamma = christoffel(BallPoint(x));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        double corr = 0.0;
        for (int k = 0; k < m; ++k) corr += gamma(k, i, j) * grad[k];
        hess[i][j] -= corr;
      }
    }
  }
  return hess;
}

inline CurvatureSample curvature_sample(const GraphField& f, const Vec& x,
                                        double h_fd = 0.0) {
  CurvatureSample s;
  s.x = x;
  double h = h_fd > 0.0 ? h_fd : default_fd_step(f, x);
  Vec dg = detail::field_gradient(f, x, h);
  s.grad_norm = detail::grad_g_norm(dg, x, f.base);
  s.b_eig = s.grad_norm * s.grad_norm;
  s.b_grad = s.grad_norm;
  s.mc_scalar = mean_curvature_scalar(f, x, h_fd);
  s.h_norm = std::fabs(s.mc_scalar) / f.m;
  auto hess = field_hessian(f, x);
  double lam2 = detail::metric_factor(x, f.base);
  lam2 *= lam2;
  double acc = 0.0;
  for (const auto& row : hess) acc += dot(row, row);
  s.hess_norm = std::sqrt(acc) / lam2;
  return s;
}

// ---- Graph families ------------------------------------------------------

inline GraphField slice_field(int m, double level,
                              Base base = Base::hyperbolic_ball,
                              Signature sig = Signature::riemannian) {
  GraphField f;
  f.m = m;
  f.base = base;
  f.signature = sig;
  f.value = [level](const Vec&) { return level; };
  f.gradient = [m](const Vec&) { return Vec(m, 0.0); };
  f.family = "slice";
  return f;
}

// The explicit radial CMC family f_c(x) = phi(r(x)) on the hyperbolic ball.
inline GraphField radial_field(const ProfileParams& params,
                               bool with_gradient = true) {
  GraphField f;
  f.m = params.m;
  f.base = Base::hyperbolic_ball;
  f.signature = params.signature;
  f.value = [params](const Vec& p) {
    double n = euclid_norm(p);
    return phi_profile(params, 2.0 * std::atanh(n));
  };
  if (with_gradient) {
    // d_i f = w(r) d_i r with d_i r = lambda(x) x_i/|x|.
    f.gradient = [params](const Vec& p) {
      double n = euclid_norm(p);
      Vec g(p.size(), 0.0);
      if (n == 0.0) return g;
      double r = 2.0 * std::atanh(n);
      double s = w_profile(params, r) * conformal_factor(p) / n;
      for (std::size_t i = 0; i < p.size(); ++i) g[i] = s * p[i];
      return g;
    };
  }
  f.family = "radial";
  return f;
}

// The exp counterexample on the euclidean plane: bounded non-constant mean
// curvature e^x (1+e^{2x})^{-3/2} with infimum 0, yet the graph is nowhere
// minimal.
inline GraphField exp_demo_field() {
  GraphField f;
  f.m = 2;
  f.base = Base::euclidean;
  f.signature = Signature::riemannian;
  f.value = [](const Vec& p) { return std::exp(p[0]); };
  f.family = "exp_demo";
  return f;
}

inline double exp_demo_closed_form(double x) {
  double e = std::exp(x);
  return e * std::pow(1.0 + e * e, -1.5);
}

// Spacelike hyperboloid in Minkowski space: graph over R^m of
//   f(x) = sqrt(k^2/(m^2 c^2) + sum_{i<=k} x_i^2).
// c here is the ||H||-convention constant; the divergence-form scalar is
// m*c for every k.
inline GraphField hyperboloid_field(int k, int m, double c) {
  if (k < 1 || k > m) throw ParamError("hyperboloid_field: need 1 <= k <= m");
  if (c == 0.0) {
    throw ParamError("hyperboloid_field: c = 0 degenerates the radius");
  }
  double a = k / (m * std::fabs(c));
  GraphField f;
  f.m = m;
  f.base = Base::euclidean;
  f.signature = Signature::lorentzian;
  f.value = [a, k](const Vec& p) {
    double s = a * a;
    for (int i = 0; i < k; ++i) s += p[i] * p[i];
    return std::sqrt(s);
  };
  f.gradient = [a, k, m](const Vec& p) {
    double s = a * a;
    for (int i = 0; i < k; ++i) s += p[i] * p[i];
    double v = std::sqrt(s);
    Vec g(m, 0.0);
    for (int i = 0; i < k; ++i) g[i] = p[i] / v;
    return g;
  };
  f.family = "hyperboloid";
  return f;
}

// ---- Radial closed forms for the Hessian bounds --------------------------

// ||Hess f||_g for the radial family:
//   Hess f = w'(r) dr x dr + w(r) coth(r) (g - dr x dr),
// so the norm is sqrt(w'^2 + (m-1) w^2 coth^2 r).
inline double hessian_norm_radial(const ProfileParams& p, double r) {
  if (r == 0.0) return std::fabs(p.c_eff()) / std::sqrt(double(p.m));
  if (r < 0.0) throw ParamError("hessian_norm_radial: r must be >= 0");
  double w = w_profile(p, r);
  double wp = w_profile_prime(p, r);
  double wc = w / std::tanh(r);
  return std::sqrt(wp * wp + (p.m - 1.0) * wc * wc);
}

struct PointwiseBoundReport {
  double lhs;    // ||Hess f||
  double rhs;    // sqrt(m) c_norm (1 - b_eig)^2
  double b_eig;  // w^2
  bool holds;
};

// Pointwise inequality ||Hess f|| >= sqrt(m)|c|(1-b)^2 with c = ||H|| and
// b the eigenvalue convention; equality at r = 0.
inline PointwiseBoundReport pointwise_hessian_check(const ProfileParams& p,
                                                double r,
                                                double tol = 1e-12) {
  if (p.signature != Signature::lorentzian) {
    throw ParamError("pointwise_hessian_check: lorentzian signature required");
  }
  PointwiseBoundReport rep;
  double w = (r == 0.0) ? 0.0 : w_profile(p, r);
  rep.b_eig = w * w;
  rep.lhs = hessian_norm_radial(p, r);
  rep.rhs = std::sqrt(double(p.m)) * p.c_norm() * (1.0 - rep.b_eig) *
            (1.0 - rep.b_eig);
  rep.holds = rep.lhs >= rep.rhs - tol;
  return rep;
}

// ---- Section 2 quantities (one-dimensional target) -----------------------

struct SectionTwoSample {
  double W;          // trace_{g - f*h} Hess f
  double norm_W;     // |W|
  double norm_Z;     // ||Z||_g with Z = W grad f/(1 - ||grad f||^2)
  double norm_hess;  // ||Hess f||_g
  double b_eig;      // ||grad f||^2
  double div_Z;      // div_g Z, finite differences
  double mc_scalar;  // W/sqrt(1 - b) for cross-checking
};

namespace detail {

// W and the Z components at p for a spacelike field, from an FD Hessian
// over the analytic gradient.
inline std::pair<double, Vec> section2_wz(const GraphField& f, const Vec& p,
                                          double h) {
  auto hess = field_hessian(f, p, h);
  Vec dg = f.gradient(p);
  double lam = metric_factor(p, f.base);
  double lam2 = lam * lam;
  double b = dot(dg, dg) / lam2;
  if (b >= 1.0 - kSpacelikeEps) {
    throw SpacelikeError("section2: ||grad f|| >= 1");
  }
  int m = f.m;
  double W = 0.0;
  for (int i = 0; i < m; ++i) {
    W += hess[i][i] / lam2;
    for (int j = 0; j < m; ++j) {
      W += dg[i] * dg[j] / (lam2 * (1.0 - b)) * hess[i][j] / lam2;
    }
  }
  Vec Z(m);
  for (int i = 0; i < m; ++i) Z[i] = W * dg[i] / (lam2 * (1.0 - b));
  return {W, Z};
}

}  // namespace detail

// Evaluates W, Z, their norms, and div_g Z at x for the radial lorentzian
// family. div_Z uses an outer FD over the (already FD) Z field, so its
// accuracy floor is ~1e-6.
inline SectionTwoSample section2_sample(const ProfileParams& params,
                                        const BallPoint& x,
                                        double h_fd = 0.0) {
  if (params.signature != Signature::lorentzian) {
    throw ParamError("section2_sample: lorentzian signature required");
  }
  GraphField f = radial_field(params);
  double scale = 1.0 - x.norm();
  double h = h_fd > 0.0 ? h_fd : kFdStep * scale;
  SectionTwoSample s;
  auto [W, Z] = detail::section2_wz(f, x.coords(), h);
  double lam = conformal_factor(x);
  Vec dg = f.gradient(x.coords());
  double b = dot(dg, dg) / (lam * lam);
  s.W = W;
  s.norm_W = std::fabs(W);
  s.norm_Z = lam * euclid_norm(Z);
  s.b_eig = b;
  auto hess = field_hessian(f, x.coords(), h);
  double acc = 0.0;
  for (const auto& row : hess) acc += dot(row, row);
  s.norm_hess = std::sqrt(acc) / (lam * lam);
  s.mc_scalar = W / std::sqrt(1.0 - b);
  double h_div = 5e-4 * scale;
  s.div_Z = divergence_g(
      [&](const Vec& p) { return detail::section2_wz(f, p, h).second; }, x,
      h_div);
  return s;
}

// Closed-form route to the same quantities on the radial family:
// W = w'/(1-w^2) + (m-1) w coth r, used for origin limits and as the
// second leg of the dual check.
inline SectionTwoSample section2_radial(const ProfileParams& params,
                                        double r) {
  if (params.signature != Signature::lorentzian) {
    throw ParamError("section2_radial: lorentzian signature required");
  }
  SectionTwoSample s;
  if (r == 0.0) {
    double c = params.c_eff();
    s.W = c;
    s.norm_W = std::fabs(c);
    s.norm_Z = 0.0;
    s.norm_hess = hessian_norm_radial(params, 0.0);
    s.b_eig = 0.0;
    s.div_Z = params.c_div * params.c_div;
    s.mc_scalar = c;
    return s;
  }
  double w = w_profile(params, r);
  double wp = w_profile_prime(params, r);
  double b = w * w;
  s.W = wp / (1.0 - b) + (params.m - 1.0) / std::tanh(r) * w;
  s.norm_W = std::fabs(s.W);
  s.norm_Z = s.norm_W * std::fabs(w) / (1.0 - b);
  s.norm_hess = hessian_norm_radial(params, r);
  s.b_eig = b;
  s.div_Z = params.c_div * params.c_div;  // divergence identity, exact in exact
                                          // arithmetic; FD route checks it
  s.mc_scalar = s.W / std::sqrt(1.0 - b);
  return s;
}

struct InequalityReport {
  double lhs;
  double rhs;
  double slack;
  bool holds;
};

struct FluxNormReport {
  InequalityReport z_bound;  // ||Z|| <= sqrt(b)/(1-b) ||W||
  InequalityReport w_bound;  // ||W|| <= sqrt(m)/(1-b) ||Hess f||
};

inline FluxNormReport flux_norm_check(const SectionTwoSample& s, int m,
                                   double tol = 1e-12) {
  if (s.b_eig >= 1.0) throw ParamError("flux_norm_check: b must be < 1");
  FluxNormReport rep;
  double b = s.b_eig;
  rep.z_bound.lhs = s.norm_Z;
  rep.z_bound.rhs = std::sqrt(b) / (1.0 - b) * s.norm_W;
  rep.z_bound.slack = rep.z_bound.rhs - rep.z_bound.lhs;
  rep.z_bound.holds = rep.z_bound.slack >= -tol;
  rep.w_bound.lhs = s.norm_W;
  rep.w_bound.rhs = std::sqrt(double(m)) / (1.0 - b) * s.norm_hess;
  rep.w_bound.slack = rep.w_bound.rhs - rep.w_bound.lhs;
  rep.w_bound.holds = rep.w_bound.slack >= -tol;
  return rep;
}

// b_D = max over the closed geodesic ball of radius R of ||grad f||_g,
// by grid sampling along a fixed direction set.
inline double spacelike_bound(const GraphField& f, double R, int grid_n) {
  if (f.signature != Signature::lorentzian) {
    throw ParamError("spacelike_bound: lorentzian signature required");
  }
  if (f.base != Base::hyperbolic_ball) {
    throw ParamError("spacelike_bound: hyperbolic base required");
  }
  int m = f.m;
  std::vector<Vec> dirs;
  for (int i = 0; i < m; ++i) {
    Vec d(m, 0.0);
    d[i] = 1.0;
    dirs.push_back(d);
    d[i] = -1.0;
    dirs.push_back(d);
  }
  Vec diag(m, 1.0 / std::sqrt(double(m)));
  dirs.push_back(diag);
  double best = 0.0;
  for (const auto& d : dirs) {
    for (int k = 0; k <= grid_n; ++k) {
      double r = R * k / grid_n;
      double rho = ball_coordinate_radius(r);
      Vec p(m);
      for (int i = 0; i < m; ++i) p[i] = rho * d[i];
      Vec dg = detail::field_gradient(f, p, default_fd_step(f, p));
      double gn = detail::grad_g_norm(dg, p, f.base);
      if (gn >= 1.0 - kSpacelikeEps) {
        throw SpacelikeError("spacelike_bound: ||grad f|| >= 1");
      }
      best = std::max(best, gn);
    }
  }
  return best;
}

// Analytic b_D for the radial family: |w| is checked nondecreasing on a
// grid, then b_D = |w(R)|.
inline double spacelike_bound_radial(const ProfileParams& params, double R,
                                     int grid_n = 256) {
  double prev = 0.0;
  for (int k = 1; k <= grid_n; ++k) {
    double cur = std::fabs(w_profile(params, R * k / grid_n));
    if (cur < prev - 1e-14) {
      throw DomainError("spacelike_bound_radial: |w| not monotone");
    }
    prev = cur;
  }
  return std::fabs(w_profile(params, R));
}

}  // namespace cmc
