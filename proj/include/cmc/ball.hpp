#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "cmc/common.hpp"
#include "cmc/integrals.hpp"

namespace cmc {

// Point of the Poincare ball model B^m with metric g = 4|dx|^2/(1-|x|^2)^2.
class BallPoint {
 public:
  explicit BallPoint(Vec coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) {
      throw ParamError("BallPoint: dimension must be >= 2");
    }
    norm_ = euclid_norm(coords_);
    if (norm_ >= 1.0 - kBoundaryMargin) {
      throw DomainError("BallPoint: |x| must be < 1 - boundary margin");
    }
  }

  const Vec& coords() const { return coords_; }
  double norm() const { return norm_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }

 private:
  Vec coords_;
  double norm_;
};

inline double conformal_factor(const BallPoint& x) {
  return 2.0 / (1.0 - x.norm() * x.norm());
}

inline double conformal_factor(const Vec& x) {
  double n2 = dot(x, x);
  if (n2 >= (1.0 - kBoundaryMargin) * (1.0 - kBoundaryMargin)) {
    throw DomainError("conformal_factor: point outside ball margin");
  }
  return 2.0 / (1.0 - n2);
}

// Hyperbolic distance to the origin, r(x) = log((1+|x|)/(1-|x|)).
inline double radial_distance(const BallPoint& x) {
  return 2.0 * std::atanh(x.norm());
}

// Euclidean radius of the geodesic sphere of hyperbolic radius r.
inline double ball_coordinate_radius(double r) { return std::tanh(0.5 * r); }

// g-gradient of r, coordinate components: (1-|x|^2)/2 * x/|x|.
// Undefined at the origin; callers needing smoothness through 0 work
// with r^2 instead.
inline Vec grad_r(const BallPoint& x) {
  double n = x.norm();
  if (n == 0.0) throw SingularPointError("grad_r: undefined at the origin");
  Vec out(x.coords());
  double s = (1.0 - n * n) / (2.0 * n);
  for (double& c : out) c *= s;
  return out;
}

// Laplacian of the distance function: (m-1) coth r.
inline double laplacian_r(double r, int m) {
  if (r <= 0.0) throw DomainError("laplacian_r: r must be > 0");
  return (m - 1.0) / std::tanh(r);
}

// Christoffel symbols of the conformal metric,
//   Gamma^k_ij = d_ik dj(log l) + d_jk di(log l) - d_ij dk(log l),
// with di(log l) = 2 x_i/(1-|x|^2).
struct Christoffel {
  int m;
  Vec dlog;  // di(log lambda)
  double operator()(int k, int i, int j) const {
    double v = 0.0;
    if (i == k) v += dlog[j];
    if (j == k) v += dlog[i];
    if (i == j) v -= dlog[k];
    return v;
  }
};

inline Christoffel christoffel(const BallPoint& x) {
  int m = x.dim();
  Vec dlog(x.coords());
  double s = 2.0 / (1.0 - x.norm() * x.norm());
  for (double& c : dlog) c *= s;
  return Christoffel{m, std::move(dlog)};
}

namespace detail {

inline void check_stencil(const Vec& p, double h) {
  double n = euclid_norm(p);
  if (n + h >= 1.0 - kBoundaryMargin) {
    throw DomainError("FD stencil leaves the ball margin");
  }
}

}  // namespace detail

inline double default_fd_step(const BallPoint& x) {
  return kFdStep * (1.0 - x.norm());
}

// div_g X = lambda^{-m} sum_i d_i(lambda^m X^i), central differences.
// X supplies coordinate vector components; second-order in h_fd.
inline double divergence_g(
    const std::function<Vec(const Vec&)>& X, const BallPoint& x,
    double h_fd = 0.0) {
  int m = x.dim();
  double h = h_fd > 0.0 ? h_fd : default_fd_step(x);
  detail::check_stencil(x.coords(), h);
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    Vec p = x.coords();
    p[i] += h;
    double fp = std::pow(conformal_factor(p), m) * X(p)[i];
    p[i] -= 2.0 * h;
    double fm = std::pow(conformal_factor(p), m) * X(p)[i];
    sum += (fp - fm) / (2.0 * h);
  }
  return sum / std::pow(conformal_factor(x), m);
}

// Covariant Hessian, coordinate components:
//   Hess_ij = d_i d_j f - sum_k Gamma^k_ij d_k f.
// Second partials by central differences with step h_fd.
inline std::vector<Vec> covariant_hessian(
    const std::function<double(const Vec&)>& f, const BallPoint& x,
    double h_fd = 0.0) {
  int m = x.dim();
  double h = h_fd > 0.0 ? h_fd : kFdStepNested * (1.0 - x.norm());
  detail::check_stencil(x.coords(), 2.0 * h);
  Christoffel gamma = christoffel(x);
  double f0 = f(x.coords());
  Vec grad(m);
  std::vector<Vec> hess(m, Vec(m, 0.0));
  for (int i = 0; i < m; ++i) {
    Vec p = x.coords();
    p[i] += h;
    double fp = f(p);
    p[i] -= 2.0 * h;
    double fm = f(p);
    grad[i] = (fp - fm) / (2.0 * h);
    hess[i][i] = (fp - 2.0 * f0 + fm) / (h * h);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Vec p = x.coords();
      p[i] += h;
      p[j] += h;
      double fpp = f(p);
      p[j] -= 2.0 * h;
      double fpm = f(p);
      p[i] -= 2.0 * h;
      double fmm = f(p);
      p[j] += 2.0 * h;
      double fmp = f(p);
      hess[i][j] = hess[j][i] = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double corr = 0.0;
      for (int k = 0; k < m; ++k) corr += gamma(k, i, j) * grad[k];
      hess[i][j] -= corr;
    }
  }
  return hess;
}

// g-norm of a covariant 2-tensor at x: both indices raised with
// g^{ij} = lambda^{-2} delta_ij.
inline double tensor_g_norm(const std::vector<Vec>& t, const BallPoint& x) {
  double lam2 = conformal_factor(x);
  lam2 *= lam2;
  double s = 0.0;
  for (const auto& row : t) s += dot(row, row);
  return std::sqrt(s) / lam2;
}

// Area of the unit (m-1)-sphere: 2 pi^{m/2} / Gamma(m/2), with the Gamma
// factor from the exact half-integer recursion.
inline double unit_sphere_area(int m) {
  if (m < 2) throw ParamError("unit_sphere_area: m must be >= 2");
  constexpr double pi = 3.14159265358979323846;
  double gamma = (m % 2 == 0) ? 1.0 : std::sqrt(pi);
  for (double z = (m % 2 == 0) ? 1.0 : 0.5; z < 0.5 * m - 0.25; z += 1.0) {
    gamma *= z;
  }
  return 2.0 * std::pow(pi, 0.5 * m) / gamma;
}

inline double ball_area_log(double R, int m) {
  if (R <= 0.0) throw ParamError("ball_area: R must be > 0");
  // log sinh R = R + log((1 - e^{-2R})/2)
  double log_sinh = R + std::log1p(-std::exp(-2.0 * R)) - std::log(2.0);
  return std::log(unit_sphere_area(m)) + (m - 1.0) * log_sinh;
}

// A(dB_R) = omega_{m-1} sinh^{m-1}(R); log-space once (m-1)R is large.
inline double ball_area(double R, int m) {
  if (R <= 0.0) throw ParamError("ball_area: R must be > 0");
  if ((m - 1.0) * R > 300.0) return std::exp(ball_area_log(R, m));
  return unit_sphere_area(m) * std::pow(std::sinh(R), m - 1);
}

inline double ball_volume_log(double R, int m) {
  if (R <= 0.0) throw ParamError("ball_volume: R must be > 0");
  double log_sinh = R + std::log1p(-std::exp(-2.0 * R)) - std::log(2.0);
  return std::log(unit_sphere_area(m)) + (m - 1.0) * log_sinh +
         std::log(sinh_power_ratio(m - 1, R));
}

// V(B_R) = omega_{m-1} I_{m-1}(R).
inline double ball_volume(double R, int m) {
  if (R <= 0.0) throw ParamError("ball_volume: R must be > 0");
  if ((m - 1.0) * R > 300.0) return std::exp(ball_volume_log(R, m));
  return unit_sphere_area(m) * sinh_power_integral(m - 1, R);
}

// A(dB_R)/V(B_R) = sinh^{m-1}(R)/I_{m-1}(R); strictly above m-1 and
// decreasing toward it.
inline double cheeger_ratio(double R, int m) {
  if (R <= 0.0) throw ParamError("cheeger_ratio: R must be > 0");
  return 1.0 / sinh_power_ratio(m - 1, R);
}

// cheeger_ratio(R, m) - (m-1), cancellation-free: the excess over the
// Cheeger constant stays meaningful (and positive) at radii where the ratio
// itself rounds to m-1.
inline double cheeger_gap(double R, int m) {
  double u = sinh_power_ratio(m - 1, R);
  return sinh_power_ratio_gap(m - 1, R) / u;
}

}  // namespace cmc
