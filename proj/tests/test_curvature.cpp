#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cmc/cmc.hpp"
#include "oracle.hpp"

using namespace cmc;

namespace {

Vec diag_point(int m, double r) {
  double s = ball_coordinate_radius(r) / std::sqrt(double(m));
  return Vec(m, s);
}

}  // namespace

TEST_CASE("slices are minimal and totally geodesic") {
  GraphField f = slice_field(3, 2.5);
  for (double r : {0.3, 1.5, 4.0}) {
    CurvatureSample s = curvature_sample(f, diag_point(3, r));
    CHECK(s.mc_scalar == 0.0);
    CHECK(s.grad_norm == 0.0);
    CHECK(s.hess_norm == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("radial family has constant riemannian mean curvature") {
  for (double c : {1.0, -0.5}) {
    ProfileParams p(2, c, Signature::riemannian);
    GraphField f = radial_field(p);
    for (double r : {0.2, 1.0, 3.0}) {
      CurvatureSample s = curvature_sample(f, diag_point(2, r));
      CHECK(s.mc_scalar == doctest::Approx(c).epsilon(2e-6));
      CHECK(s.h_norm == doctest::Approx(std::fabs(c) / 2.0).epsilon(2e-6));
      CHECK(s.b_eig == doctest::Approx(s.b_grad * s.b_grad));
    }
  }
}

TEST_CASE("radial family, lorentzian, stays spacelike with scalar m<H,nu>") {
  ProfileParams p(3, 2.0, Signature::lorentzian);
  GraphField f = radial_field(p);
  for (double r : {0.2, 1.0, 3.0, 5.0}) {
    CurvatureSample s = curvature_sample(f, diag_point(3, r));
    CHECK(s.b_grad < 1.0);
    CHECK(s.mc_scalar == doctest::Approx(2.0).epsilon(2e-6));
  }
}

TEST_CASE("gradient-free evaluation agrees with the analytic gradient") {
  ProfileParams p(3, 1.5, Signature::riemannian);
  GraphField with = radial_field(p, true);
  GraphField without = radial_field(p, false);
  for (double r : {0.5, 2.0}) {
    Vec x = diag_point(3, r);
    CHECK(mean_curvature_scalar(without, x) ==
          doctest::Approx(mean_curvature_scalar(with, x)).epsilon(1e-5));
  }
}

TEST_CASE("exp demo closed form") {
  GraphField f = exp_demo_field();
  for (double x1 : {-5.0, -2.0, 0.0, 1.0, 3.0}) {
    double mc = mean_curvature_scalar(f, Vec{x1, 0.7});
    CHECK(mc == doctest::Approx(exp_demo_closed_form(x1)).epsilon(1e-7));
  }
  CHECK(exp_demo_closed_form(0.0) ==
        doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-15));
  // Bounded, nonzero: the maximum 2/(3 sqrt 3) sits at e^{2x} = 1/2.
  double top = exp_demo_closed_form(-0.5 * std::log(2.0));
  CHECK(top == doctest::Approx(2.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-15));
}

TEST_CASE("exp demo violates the spacelike condition if forced lorentzian") {
  GraphField f = exp_demo_field();
  f.signature = Signature::lorentzian;
  CHECK_THROWS_AS(mean_curvature_scalar(f, Vec{0.5, 0.0}), SpacelikeError);
}

TEST_CASE("hyperboloids have mean curvature m c for every cylinder split") {
  double c = 0.7;
  for (auto [k, m] : {std::pair{2, 2}, {1, 3}, {3, 3}}) {
    GraphField f = hyperboloid_field(k, m, c);
    for (double t : {-1.5, -0.3, 0.2, 0.9, 2.0}) {
      Vec x(m, 0.1);
      x[0] = t;
      CurvatureSample s = curvature_sample(f, x);
      CHECK(s.mc_scalar == doctest::Approx(m * c).epsilon(1e-8));
      CHECK(s.b_grad < 1.0);
    }
  }
  CHECK_THROWS_AS(hyperboloid_field(0, 2, 1.0), ParamError);
  CHECK_THROWS_AS(hyperboloid_field(1, 2, 0.0), ParamError);
}

TEST_CASE("second fundamental form norm, analytic vs FD") {
  ProfileParams p(3, 2.0, Signature::lorentzian);
  GraphField f = radial_field(p);
  for (double r : {0.4, 1.2}) {
    Vec x = diag_point(3, r);
    CurvatureSample s = curvature_sample(f, x);
    CHECK(s.hess_norm ==
          doctest::Approx(hessian_norm_radial(p, r)).epsilon(1e-5));
  }
  // Origin limit |c_eff|/sqrt(m).
  CHECK(hessian_norm_radial(p, 0.0) ==
        doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("divergence of Z recovers c^2") {
  for (int m : {2, 3}) {
    ProfileParams p(m, 1.3, Signature::lorentzian);
    for (double r : {0.3, 0.8, 1.5}) {
      SectionTwoSample s =
          section2_sample(p, BallPoint(diag_point(m, r)));
      CHECK(s.div_Z == doctest::Approx(p.c_div * p.c_div).epsilon(2e-4));
      CHECK(s.mc_scalar == doctest::Approx(p.c_div).epsilon(1e-5));
    }
  }
}

TEST_CASE("W is the scalar mean curvature times the volume factor") {
  ProfileParams p(2, 1.7, Signature::lorentzian);
  for (double r : {0.3, 1.0, 2.5}) {
    SectionTwoSample s = section2_radial(p, r);
    CHECK(s.W == doctest::Approx(s.mc_scalar * std::sqrt(1.0 - s.b_eig))
                     .epsilon(1e-12));
  }
}

TEST_CASE("norm inequalities for W and Z") {
  ProfileParams p(3, 2.5, Signature::lorentzian);
  for (double r : {0.4, 1.0, 2.0}) {
    SectionTwoSample s = section2_radial(p, r);
    FluxNormReport rep = flux_norm_check(s, 3, 1e-9);
    // First bound is an identity for one-dimensional targets; the second
    // is strict away from the origin.
    CHECK(rep.z_bound.slack == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(rep.w_bound.slack > 0.0);
    CHECK(rep.z_bound.holds);
    CHECK(rep.w_bound.holds);
  }
  // At the origin the second bound is tight: ||W|| = sqrt(m) ||Hess||.
  SectionTwoSample s0 = section2_radial(p, 0.0);
  CHECK(s0.norm_W ==
        doctest::Approx(std::sqrt(3.0) * s0.norm_hess).epsilon(1e-12));
}

TEST_CASE("pointwise second-fundamental-form bound") {
  ProfileParams p(2, 3.0, Signature::lorentzian);
  for (double r : {0.0, 0.5, 1.5, 3.0}) {
    PointwiseBoundReport rep = pointwise_hessian_check(p, r);
    CHECK(rep.holds);
  }
  // Equality at the origin.
  PointwiseBoundReport at0 = pointwise_hessian_check(p, 0.0);
  CHECK(at0.lhs == doctest::Approx(at0.rhs).epsilon(1e-12));
}

TEST_CASE("spacelike scan over a ball") {
  ProfileParams p(2, 4.0, Signature::lorentzian);
  GraphField f = radial_field(p);
  double b = spacelike_bound(f, 3.0, 64);
  CHECK(b < 1.0);
  CHECK(b == doctest::Approx(spacelike_bound_radial(p, 3.0)).epsilon(1e-6));
}
