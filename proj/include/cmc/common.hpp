#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmc {

enum class Signature { riemannian, lorentzian };
enum class Base { hyperbolic_ball, euclidean };
enum class Branch { plus, minus };

// Bad parameters / configuration (CLI exit code 2).
struct ParamError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation left the valid domain (CLI exit code 3).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Spacelike condition ||grad f|| < 1 violated (CLI exit code 3).
struct SpacelikeError : DomainError {
  using DomainError::DomainError;
};

// Quantity undefined at an isolated point (gradient of r at the origin).
struct SingularPointError : DomainError {
  using DomainError::DomainError;
};

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// Points with |x| >= 1 - kBoundaryMargin are rejected: the conformal factor
// and any FD stencil must stay finite.
inline constexpr double kBoundaryMargin = 1e-6;

// Spacelike guard applied at every stencil point.
inline constexpr double kSpacelikeEps = 1e-9;

// Below this radius the profile functions switch to their series branches;
// the 0/0 ratio I_p/sinh^p loses all significant digits as r -> 0.
inline constexpr double kSeriesSwitch = 1e-2;

inline constexpr double kQuadTol = 1e-12;

// Central-difference steps. kFdStep balances truncation against roundoff for
// a single first derivative; kFdStepNested for divergence-of-FD-gradient
// compositions, where the roundoff term is divided by h twice.
inline const double kFdStep = std::cbrt(kEps);
inline const double kFdStepNested = std::sqrt(std::sqrt(kEps));

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double euclid_norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline int sign_of(Branch b) { return b == Branch::plus ? 1 : -1; }

inline std::string to_string(Signature s) {
  return s == Signature::riemannian ? "riemannian" : "lorentzian";
}

inline std::string to_string(Base b) {
  return b == Base::hyperbolic_ball ? "hyperbolic_ball" : "euclidean";
}

// coth(r) - 1 without cancellation at large r.
inline double coth_minus_one(double r) { return 2.0 / std::expm1(2.0 * r); }

}  // namespace cmc
