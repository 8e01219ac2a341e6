#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "cmc/ball.hpp"
#include "cmc/common.hpp"
#include "cmc/curvature.hpp"
#include "cmc/profile.hpp"

namespace cmc {

struct IsoperimetricReport {
  int m;
  double c_div;
  Signature signature;
  double R;
  double lhs;    // per the bound checked
  double rhs;
  double ratio;  // A(dB_R)/V(B_R)
  double slack;
  bool holds;
};

// Parallel mean curvature forces ||H|| <= (1/m) A(dD)/V(D) on
// every compact D. Checked on the geodesic-ball family, where the right
// side is (1/m) / u(R); the slack goes through cheeger_gap so it stays
// positive (as the mathematics says) even at R where the ratio rounds
// to m-1.
inline IsoperimetricReport ball_bound_check(int m, double c_div, double R) {
  ProfileParams params(m, c_div, Signature::riemannian);
  IsoperimetricReport rep;
  rep.m = m;
  rep.c_div = c_div;
  rep.signature = Signature::riemannian;
  rep.R = R;
  rep.lhs = params.c_norm();
  rep.ratio = cheeger_ratio(R, m);
  rep.rhs = rep.ratio / m;
  // Grouped so the gap survives when |c| = m-1 exactly.
  rep.slack = (cheeger_gap(R, m) + ((m - 1.0) - std::fabs(c_div))) / m;
  rep.holds = rep.slack > 0.0;
  return rep;
}

// Lorentzian isoperimetric bound
//   min ||H|| <= (1/m) b_D/sqrt(1-b_D^2) A(dD)/V(D).
// On geodesic balls the radial family saturates it exactly:
// b_D/sqrt(1-b_D^2) = |c| u(R) and A/V = 1/u(R).
inline IsoperimetricReport ball_saturation_check(int m, double c_div, double R,
                                           bool analytic_bd = true,
                                           int grid_n = 64) {
  ProfileParams params(m, c_div, Signature::lorentzian);
  IsoperimetricReport rep;
  rep.m = m;
  rep.c_div = c_div;
  rep.signature = Signature::lorentzian;
  rep.R = R;
  rep.lhs = params.c_norm();
  rep.ratio = cheeger_ratio(R, m);
  double bd = analytic_bd
                  ? spacelike_bound_radial(params, R)
                  : spacelike_bound(radial_field(params), R, grid_n);
  rep.rhs = bd / std::sqrt(1.0 - bd * bd) * rep.ratio / m;
  rep.slack = rep.rhs - rep.lhs;
  rep.holds = rep.slack >= -1e-8;
  return rep;
}

struct GlobalBoundReport {
  int m;
  double c_div;
  double R;
  double lhs;              // m^2 c_norm^2 V(B_R) = c_div^2 V
  double rhs;              // A(dB_R) sup sqrt(m b)/(1-b)^2 ||Hess f||
  double surface_integral; // closed-form flux of Z through dB_R
  double middle_residual;  // |surface_integral - lhs| / max(1, lhs)
  bool holds;
};

// Global form of the second-fundamental-form bound:
//   c_div^2 V(D) = flux of Z through dD <= A(dD) sup sqrt(mb)/(1-b)^2 ||Hess||.
// The flux reduces to a single radial evaluation times the sphere area
// because the integrand is constant on geodesic spheres.
inline GlobalBoundReport global_hessian_check(int m, double c_div,
                                                double R, int grid_n = 512) {
  ProfileParams params(m, c_div, Signature::lorentzian);
  GlobalBoundReport rep;
  rep.m = m;
  rep.c_div = c_div;
  rep.R = R;
  double V = ball_volume(R, m);
  double A = ball_area(R, m);
  rep.lhs = c_div * c_div * V;
  double sup = 0.0;
  for (int k = 0; k <= grid_n; ++k) {
    double r = R * k / grid_n;
    double w = (r == 0.0) ? 0.0 : w_profile(params, r);
    double b = w * w;
    double val = std::sqrt(m * b) / ((1.0 - b) * (1.0 - b)) *
                 hessian_norm_radial(params, r);
    sup = std::max(sup, val);
  }
  rep.rhs = A * sup;
  // g(Z, outward normal) on dB_R = W w/(1-w^2), constant on the sphere.
  SectionTwoSample s = section2_radial(params, R);
  double w = w_profile(params, R);
  rep.surface_integral = A * s.W * w / (1.0 - w * w);
  rep.middle_residual =
      std::fabs(rep.surface_integral - rep.lhs) / std::max(1.0, rep.lhs);
  rep.holds = rep.lhs <= rep.rhs + 1e-10;
  return rep;
}

enum class FoliationMode { vary_d, vary_c };

struct FoliationLeafSample {
  double c;
  double d;
  double r;
  double value;  // f_c(r) + d
};

struct FoliationReport {
  FoliationMode mode;
  std::vector<FoliationLeafSample> samples;
  double min_leaf_separation;  // vary_d: min over leaf pairs and x
  double min_c_derivative;     // vary_c: min over (x, c) of df_c/dc
  bool pass;
};

// vary_d: leaves are vertical translates, so distinct offsets give disjoint
// leaves and the separation at every x equals |d1 - d2| exactly.
inline FoliationReport foliation_vary_d(const ProfileParams& params,
                                        const std::vector<double>& d_grid,
                                        const std::vector<double>& r_samples) {
  FoliationReport rep;
  rep.mode = FoliationMode::vary_d;
  rep.min_c_derivative = 0.0;
  double min_sep = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (double r : r_samples) {
    double base = phi_profile(params, r);
    for (double d : d_grid) {
      rep.samples.push_back({params.c_div, d, r, base + d});
    }
    for (std::size_t i = 0; i < d_grid.size(); ++i) {
      for (std::size_t j = i + 1; j < d_grid.size(); ++j) {
        double sep = std::fabs((base + d_grid[i]) - (base + d_grid[j]));
        double expect = std::fabs(d_grid[i] - d_grid[j]);
        min_sep = std::min(min_sep, sep);
        if (std::fabs(sep - expect) >
            16.0 * kEps * std::max(1.0, std::fabs(base) + expect)) {
          ok = false;
        }
        if (d_grid[i] != d_grid[j] && sep == 0.0) ok = false;
      }
    }
  }
  rep.min_leaf_separation = min_sep;
  rep.pass = ok;
  return rep;
}

// vary_c: at fixed d the map c -> f_c(x) is strictly monotone away from the
// axis (all leaves cross at r = 0, so the foliation claim is local, and so
// is this check: r >= 0.1 only).
inline FoliationReport foliation_vary_c(int m, Signature sig,
                                        const std::vector<double>& c_grid,
                                        const std::vector<double>& r_samples,
                                        double dc = 1e-4,
                                        double min_derivative = 1e-3) {
  FoliationReport rep;
  rep.mode = FoliationMode::vary_c;
  rep.min_leaf_separation = 0.0;
  double min_deriv = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (double r : r_samples) {
    if (r < 0.1) throw ParamError("foliation_vary_c: r samples must be >= 0.1");
    double prev = -std::numeric_limits<double>::infinity();
    for (double c : c_grid) {
      ProfileParams p(m, c, sig);
      double val = phi_profile(p, r);
      rep.samples.push_back({c, 0.0, r, val});
      if (val <= prev) ok = false;
      prev = val;
      ProfileParams pp(m, c + dc, sig);
      ProfileParams pm(m, c - dc, sig);
      double deriv =
          (phi_profile(pp, r) - phi_profile(pm, r)) / (2.0 * dc);
      min_deriv = std::min(min_deriv, deriv);
    }
  }
  rep.min_c_derivative = min_deriv;
  rep.pass = ok && min_deriv >= min_derivative;
  return rep;
}

}  // namespace cmc
