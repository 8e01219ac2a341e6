#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cmc/analysis.hpp"
#include "cmc/ball.hpp"
#include "cmc/common.hpp"
#include "cmc/curvature.hpp"
#include "cmc/profile.hpp"

namespace cmc {

struct VerificationReport {
  std::string name;
  bool pass;
  double max_residual;
  double tolerance;
  long samples;
  // Worst-case constants, both conventions, for the grid the check ran on.
  double c_div;
  double c_norm;
};

struct VerifyConfig {
  double analytic_tol = 1e-8;
  double fd_tol = 1e-4;
  double quad_tol = kQuadTol;
  // When positive, overrides every check tolerance.
  double tol_override = 0.0;

  double analytic() const { return tol_override > 0 ? tol_override : analytic_tol; }
  double fd() const { return tol_override > 0 ? tol_override : fd_tol; }
  double pick(double t) const { return tol_override > 0 ? tol_override : t; }
};

namespace detail {

struct Accumulator {
  double max_residual = 0.0;
  long samples = 0;
  double worst_c = 0.0;
  void add(double residual, double c) {
    ++samples;
    if (residual > max_residual) {
      max_residual = residual;
      worst_c = c;
    }
  }
};

inline VerificationReport finish(const std::string& name,
                                 const Accumulator& acc, double tol,
                                 int m_for_norm) {
  return {name,        acc.max_residual <= tol,
          acc.max_residual, tol,
          acc.samples, acc.worst_c,
          std::fabs(acc.worst_c) / m_for_norm};
}

inline std::vector<double> c_grid(int m, Signature sig) {
  std::vector<double> cs = {0.0, 0.5 * (m - 1.0), -0.5 * (m - 1.0),
                            m - 1.0, 1.0 - m};
  if (sig == Signature::lorentzian) {
    cs.push_back(2.0 * m);
    cs.push_back(-2.0 * m);
  }
  return cs;
}

// FD residual of the slope ODE, normalized like ode_residual.
inline double ode_residual_fd(const ProfileParams& p, double r,
                              double h = 1e-5) {
  double w = w_profile(p, r);
  double wp = (w_profile(p, r + h) - w_profile(p, r - h)) / (2.0 * h);
  double sig = (p.signature == Signature::riemannian) ? 1.0 : -1.0;
  double q = 1.0 + sig * w * w;
  double t1 = p.c_eff() * q * std::sqrt(q);
  double t2 = (p.m - 1.0) / std::tanh(r) * w * q;
  double scale = std::max({1.0, std::fabs(t1), std::fabs(t2), std::fabs(wp)});
  return std::fabs(wp - (t1 - t2)) / scale;
}

}  // namespace detail

// Residuals of the slope equation for both signatures: the analytic route
// (chain rule through the linear equation) and an FD derivative of w.
inline std::vector<VerificationReport> suite_ode(const VerifyConfig& cfg) {
  detail::Accumulator analytic, fd;
  int worst_m = 2;
  for (int m : {2, 3, 5}) {
    for (Signature sig : {Signature::riemannian, Signature::lorentzian}) {
      for (double c : detail::c_grid(m, sig)) {
        ProfileParams p(m, c, sig);
        for (int k = 0; k <= 60; ++k) {
          double r = 0.01 * std::pow(2000.0, k / 60.0);  // [0.01, 20]
          double res = std::fabs(ode_residual(p, r));
          if (res > analytic.max_residual) worst_m = m;
          analytic.add(res, c);
          fd.add(detail::ode_residual_fd(p, r), c);
        }
      }
    }
  }
  return {detail::finish("ode_residual_analytic", analytic,
                         cfg.pick(1e-10), worst_m),
          detail::finish("ode_residual_fd", fd, cfg.pick(1e-6), worst_m)};
}

// Profile bounds: the strict sup bound on u, its limit value, the linear
// equation, the recurrence derivative identity, and the series remainders.
inline std::vector<VerificationReport> suite_bounds(const VerifyConfig& cfg) {
  std::vector<VerificationReport> out;
  {
    detail::Accumulator acc;
    for (int m = 2; m <= 8; ++m) {
      for (int k = 1; k <= 10000; ++k) {
        double r = 40.0 * k / 10000.0;
        // any non-positive gap counts as a full violation
        acc.add(u_bound_gap(m, r) > 0.0 ? 0.0 : 1.0, m - 1.0);
      }
      acc.add(u_bound_gap(m, 40.0) / (m - 1.0), m - 1.0);  // |u(40)-1/(m-1)|
    }
    out.push_back(detail::finish("u_sup_bound", acc, cfg.pick(1e-10), 2));
  }
  {
    detail::Accumulator acc;
    for (int m : {2, 3, 5}) {
      for (int k = 0; k <= 200; ++k) {
        double r = 0.1 + (10.0 - 0.1) * k / 200.0;
        double h = 1e-5;
        double fd =
            (u_profile(m, r + h) - u_profile(m, r - h)) / (2.0 * h);
        double res = std::fabs(fd - u_profile_prime(m, r));
        acc.add(res, 1.0);
      }
    }
    out.push_back(detail::finish("u_linear_ode_fd", acc, cfg.pick(1e-8), 2));
  }
  {
    detail::Accumulator acc;
    for (int p = 0; p <= 12; ++p) {
      for (int k = 0; k <= 100; ++k) {
        double r = 0.1 + (10.0 - 0.1) * k / 100.0;
        double h = 1e-5;
        double fd = (sinh_power_integral(p, r + h) -
                     sinh_power_integral(p, r - h)) /
                    (2.0 * h);
        double exact = std::pow(std::sinh(r), p);
        acc.add(std::fabs(fd - exact) / std::max(1.0, exact), 1.0);
      }
    }
    out.push_back(
        detail::finish("recurrence_derivative", acc, cfg.pick(1e-8), 2));
  }
  {
    detail::Accumulator acc;
    for (int m : {2, 3, 5}) {
      for (int k = 0; k <= 400; ++k) {
        double r = 1e-3 * std::pow(100.0, k / 400.0);  // [1e-3, 0.1]
        double res =
            std::fabs(u_profile(m, r) - u_series(m, r)) / std::pow(r, 5);
        acc.add(res, 1.0);
      }
    }
    out.push_back(detail::finish("u_series_remainder", acc, cfg.pick(0.05), 2));
  }
  {
    detail::Accumulator acc;
    for (int m : {2, 3, 5}) {
      for (Signature sig : {Signature::riemannian, Signature::lorentzian}) {
        for (double c : {0.5 * (m - 1.0), m - 1.0}) {
          ProfileParams p(m, c, sig);
          for (int k = 0; k <= 400; ++k) {
            double r = 1e-3 * std::pow(100.0, k / 400.0);
            double res = std::fabs(phi_profile(p, r) -
                                   c / m * r * r / 2.0) /
                         std::pow(r, 4);
            acc.add(res, c);
          }
        }
      }
    }
    out.push_back(
        detail::finish("phi_series_remainder", acc, cfg.pick(0.5), 2));
  }
  return out;
}

// Constant-mean-curvature property of every family, FD route.
inline std::vector<VerificationReport> suite_curvature(
    const VerifyConfig& cfg) {
  std::vector<VerificationReport> out;
  for (Signature sig : {Signature::riemannian, Signature::lorentzian}) {
    detail::Accumulator acc;
    int worst_m = 2;
    for (int m : {2, 3, 5}) {
      Vec dir(m, 1.0 / std::sqrt(double(m)));
      for (double c : detail::c_grid(m, sig)) {
        ProfileParams params(m, c, sig);
        GraphField f = radial_field(params, /*with_gradient=*/false);
        for (int k = 0; k < 40; ++k) {
          double r = 0.1 + (5.0 - 0.1) * k / 39.0;
          double rho = ball_coordinate_radius(r);
          Vec x(m);
          for (int i = 0; i < m; ++i) x[i] = rho * dir[i];
          double res = std::fabs(mean_curvature_scalar(f, x) - c);
          if (res > acc.max_residual) worst_m = m;
          acc.add(res, c);
        }
      }
    }
    std::string name = sig == Signature::riemannian
                           ? "constant_curvature_riemannian"
                           : "constant_curvature_lorentzian";
    out.push_back(detail::finish(name, acc, cfg.fd(), worst_m));
  }
  {
    detail::Accumulator acc;
    GraphField f = exp_demo_field();
    for (int k = 0; k <= 80; ++k) {
      double x0 = -5.0 + 8.0 * k / 80.0;
      Vec x = {x0, 0.3};
      double res =
          std::fabs(mean_curvature_scalar(f, x) - exp_demo_closed_form(x0));
      acc.add(res, 0.0);
    }
    out.push_back(detail::finish("exp_demo_closed_form", acc,
                                 cfg.pick(1e-6), 2));
  }
  {
    detail::Accumulator acc;
    int worst_m = 2;
    for (auto [k, m] : std::vector<std::pair<int, int>>{{2, 2}, {1, 3},
                                                        {3, 3}}) {
      double c = 1.0;
      GraphField f = hyperboloid_field(k, m, c);
      for (int i = 0; i < 5; ++i) {
        Vec x(m, 0.0);
        for (int j = 0; j < k; ++j) x[j] = -1.0 + 0.5 * i + 0.1 * j;
        double res = std::fabs(mean_curvature_scalar(f, x) - m * c);
        if (res > acc.max_residual) worst_m = m;
        acc.add(res, m * c);
      }
    }
    out.push_back(
        detail::finish("hyperboloid_constant", acc, cfg.pick(1e-6), worst_m));
  }
  {
    detail::Accumulator acc;
    GraphField f = slice_field(3, 1.25);
    for (int k = 1; k <= 5; ++k) {
      Vec x = {0.1 * k, -0.05 * k, 0.02};
      acc.add(std::fabs(mean_curvature_scalar(f, x)), 0.0);
    }
    out.push_back(detail::finish("slice_minimal", acc, cfg.pick(1e-10), 3));
  }
  return out;
}

// Section-2 identities on the lorentzian radial families.
inline std::vector<VerificationReport> suite_section2(
    const VerifyConfig& cfg) {
  std::vector<VerificationReport> out;
  detail::Accumulator div_acc, flux_acc, consist_acc, origin_acc, hess_acc;
  int worst_m = 2;
  for (int m : {2, 3, 5}) {
    Vec dir(m, 1.0 / std::sqrt(double(m)));
    for (double c : detail::c_grid(m, Signature::lorentzian)) {
      ProfileParams params(m, c, Signature::lorentzian);
      for (int k = 0; k < 20; ++k) {
        double r = 0.2 + (2.0 - 0.2) * k / 19.0;
        double rho = ball_coordinate_radius(r);
        Vec xc(m);
        for (int i = 0; i < m; ++i) xc[i] = rho * dir[i];
        BallPoint x(xc);
        SectionTwoSample s = section2_sample(params, x);
        if (std::fabs(s.div_Z - c * c) > div_acc.max_residual) worst_m = m;
        div_acc.add(std::fabs(s.div_Z - c * c), c);
        // The first inequality is an identity for one-dimensional targets
        // (Z is W grad f/(1-b) exactly), so its slack is pure FD noise;
        // the second is strict off the origin.
        FluxNormReport l = flux_norm_check(s, m, cfg.pick(1e-6));
        flux_acc.add(std::max(-l.z_bound.slack, -l.w_bound.slack), c);
        GraphField f = radial_field(params);
        double mc = mean_curvature_scalar(f, xc);
        consist_acc.add(std::fabs(s.mc_scalar - mc), c);
      }
      // Origin: the second norm inequality is tight (Hess proportional to g).
      SectionTwoSample s0 = section2_radial(params, 0.0);
      origin_acc.add(
          std::fabs(s0.norm_W - std::sqrt(double(m)) * s0.norm_hess), c);
      for (double r : {0.0, 0.5, 1.0, 2.0, 5.0}) {
        auto rep = pointwise_hessian_check(params, r);
        hess_acc.add(std::max(0.0, rep.rhs - rep.lhs), c);
      }
    }
  }
  out.push_back(detail::finish("div_Z_identity", div_acc, cfg.fd(), worst_m));
  out.push_back(detail::finish("flux_norm_inequalities", flux_acc,
                               cfg.pick(1e-6), worst_m));
  out.push_back(detail::finish("W_vs_mean_curvature", consist_acc,
                               cfg.pick(1e-6), worst_m));
  out.push_back(detail::finish("flux_origin_tight", origin_acc,
                               cfg.analytic(), worst_m));
  out.push_back(detail::finish("pointwise_hessian_bound", hess_acc,
                               cfg.pick(1e-12), worst_m));
  return out;
}

inline std::vector<VerificationReport> suite_isoperimetric(
    const VerifyConfig& cfg) {
  std::vector<VerificationReport> out;
  {
    detail::Accumulator acc;
    for (int m : {2, 3, 5}) {
      for (double c : {0.0, 0.5 * (m - 1.0), -0.5 * (m - 1.0), m - 1.0,
                       1.0 - m}) {
        for (double R : {0.5, 1.0, 2.0, 5.0, 10.0, 40.0}) {
          auto rep = ball_bound_check(m, c, R);
          acc.add(rep.holds ? 0.0 : 1.0, c);
        }
      }
    }
    out.push_back(detail::finish("ball_bound_strict", acc, cfg.pick(0.0), 2));
  }
  {
    detail::Accumulator acc;
    int worst_m = 2;
    for (int m : {2, 3, 5}) {
      for (double c : detail::c_grid(m, Signature::lorentzian)) {
        if (c == 0.0) continue;
        for (double R : {0.5, 1.0, 3.0}) {
          auto rep = ball_saturation_check(m, c, R);
          double res = std::fabs(rep.lhs - rep.rhs);
          if (res > acc.max_residual) worst_m = m;
          acc.add(res, c);
        }
      }
    }
    out.push_back(detail::finish("ball_saturation", acc,
                                 cfg.analytic(), worst_m));
  }
  {
    detail::Accumulator acc;
    for (int m : {2, 3, 5}) {
      for (double c : detail::c_grid(m, Signature::lorentzian)) {
        for (double R : {0.5, 1.0, 3.0}) {
          auto rep = global_hessian_check(m, c, R);
          acc.add(rep.holds ? rep.middle_residual : 1.0, c);
        }
      }
    }
    out.push_back(detail::finish("global_hessian_bound", acc, cfg.analytic(), 2));
  }
  {
    detail::Accumulator acc;
    for (int m : {2, 3, 5}) {
      double prev = std::numeric_limits<double>::infinity();
      for (double R : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 40.0}) {
        double gap = cheeger_gap(R, m);
        acc.add(gap < prev && gap > 0.0 ? 0.0 : 1.0, m - 1.0);
        prev = gap;
      }
      acc.add(cheeger_gap(40.0, m), m - 1.0);
    }
    out.push_back(detail::finish("cheeger_limit", acc, cfg.pick(1e-10), 2));
  }
  return out;
}

inline std::vector<VerificationReport> suite_foliation(
    const VerifyConfig& cfg) {
  std::vector<VerificationReport> out;
  {
    detail::Accumulator acc;
    for (int m : {2, 3}) {
      for (Signature sig : {Signature::riemannian, Signature::lorentzian}) {
        ProfileParams p(m, 0.5 * (m - 1.0), sig);
        auto rep = foliation_vary_d(p, {-1.0, -0.25, 0.0, 0.5, 2.0},
                                    {0.0, 0.5, 1.0, 2.0});
        acc.add(rep.pass ? 0.0 : 1.0, p.c_div);
      }
    }
    out.push_back(detail::finish("foliation_vary_d", acc, cfg.pick(0.0), 2));
  }
  {
    detail::Accumulator acc;
    for (int m : {2, 3, 5}) {
      std::vector<double> c_riem = {-0.9 * (m - 1.0), -0.5 * (m - 1.0), 0.0,
                                    0.5 * (m - 1.0), 0.9 * (m - 1.0)};
      std::vector<double> c_lor = {-2.0 * m, -2.0, 0.0, 2.0, 2.0 * m};
      auto r1 = foliation_vary_c(m, Signature::riemannian, c_riem,
                                 {0.5, 1.0, 2.0});
      auto r2 = foliation_vary_c(m, Signature::lorentzian, c_lor,
                                 {0.5, 1.0, 2.0});
      // residual: how far the worst c-derivative dips below the threshold
      double deficit = std::max(
          {0.0, 1e-3 - r1.min_c_derivative, 1e-3 - r2.min_c_derivative});
      acc.add(r1.pass && r2.pass ? deficit : 1.0, 0.0);
    }
    out.push_back(detail::finish("foliation_vary_c", acc, cfg.pick(0.0), 2));
  }
  return out;
}

inline std::vector<VerificationReport> run_suites(const std::string& selector,
                                                  const VerifyConfig& cfg) {
  std::vector<VerificationReport> out;
  auto append = [&](std::vector<VerificationReport> v) {
    out.insert(out.end(), v.begin(), v.end());
  };
  bool all = selector == "all";
  if (all || selector == "ode") append(suite_ode(cfg));
  if (all || selector == "bounds") append(suite_bounds(cfg));
  if (all || selector == "curvature") append(suite_curvature(cfg));
  if (all || selector == "section2") append(suite_section2(cfg));
  if (all || selector == "isoperimetric") append(suite_isoperimetric(cfg));
  if (all || selector == "foliation") append(suite_foliation(cfg));
  if (out.empty()) {
    throw ParamError("unknown verification suite: " + selector);
  }
  return out;
}

}  // namespace cmc
