#pragma once

#include "bilipkit/point.hpp"

namespace bilipkit {

inline constexpr double kOriginEpsilon = 1e-300;
inline constexpr double kPoleEpsilon = 1e-12;
/// Denominator floor of every relative residual.
inline constexpr double kResidualFloor = 1e-30;

/// Euclidean inversion x -> x / |x|^2. Throws OriginError if |x| < origin_epsilon.
Point invert(const Point& x, double origin_epsilon = kOriginEpsilon);

/// Inverse stereographic projection R^q -> S^q \ {N_q} with centre the north pole:
/// x -> (2x / (1 + |x|^2), (|x|^2 - 1) / (|x|^2 + 1)).
SpherePoint stereo_embed(const Point& x);

/// Stereographic projection S^q \ {N_q} -> R^q. Throws PoleError if
/// 1 - p_last <= pole_epsilon.
Point stereo_project(const SpherePoint& p, double pole_epsilon = kPoleEpsilon);

/// Which formula the chart near the north pole evaluates.
enum class BetaVariant {
  /// y -> (y / (1 + |y|^2), (1 - |y|) / (1 + |y|^2)), taken literally.
  Verbatim,
  /// The verbatim value pushed radially onto the unit sphere.
  Projected,
  /// y -> (2y / (1 + |y|^2), (1 - |y|^2) / (1 + |y|^2)), i.e. stereo_embed o invert,
  /// which maps the closed 1/2-ball onto the cap {t >= 3/5}.
  Renormalized,
};

/// Chart of the closed ball of radius 1/2 onto a cap around the north pole.
/// The verbatim variant does not land on S^q in general, so the result is a
/// plain point of R^{q+1}; see `sphere_defect`. Throws DomainError if |y| > 1/2.
Point beta(const Point& y, BetaVariant variant = BetaVariant::Verbatim);

/// | |p| - 1 |.
double sphere_defect(const Point& p);

struct ClaimBounds {
  double lower = 0.0;
  double upper = 0.0;
  double distance = 0.0;
  double c = 0.0;
  bool holds = false;
};

/// Two-sided estimate of |x' - x| when |x'| = (1 + C) |x|, C > 0:
///   C / (1 + C) |x'| <= |x' - x| <= (2 + C) / (1 + C) |x'|.
/// Requires |x'| > |x| > 0.
ClaimBounds claim_lip1_bounds(const Point& x, const Point& x_prime);

/// Relative residual of |invert(x1) - invert(x2)| = |invert(x1)| |invert(x2)| |x1 - x2|.
double e_E_residual(const Point& x1, const Point& x2);

/// Relative residual of e^2 = (r1 - r2)^2 cos^2(t) + (r1 + r2)^2 sin^2(t), where
/// e = |x1 - x2|, r_i = |x_i| with r1 >= r2, and 2t is the angle between x1 and x2.
double law_of_cosines_residual(const Point& x1, const Point& x2);

/// Central finite-difference estimate of the operator norm of the derivative of
/// `invert` at x, along an orthonormal frame whose first vector is x / |x|.
/// Requires 0 < h <= 1e-4 |x|.
double inversion_derivative_norm(const Point& x, double h);

}  // namespace bilipkit
