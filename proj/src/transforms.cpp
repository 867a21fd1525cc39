#include "bilipkit/transforms.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "bilipkit/errors.hpp"

namespace bilipkit {

Point invert(const Point& x, double origin_epsilon) {
  const double r = x.norm();
  if (r < origin_epsilon) {
    throw OriginError("inversion is undefined at the origin");
  }
  // Two divisions by |x| keep |x|^2 from underflowing for tiny inputs.
  std::vector<double> out(x.coords().begin(), x.coords().end());
  for (double& c : out) {
    c = (c / r) / r;
  }
  return Point(std::move(out));
}

SpherePoint stereo_embed(const Point& x) {
  const std::size_t q = x.dim();
  const double s = x.norm();
  std::vector<double> out(q + 1);
  if (s <= 1.0) {
    const double s2 = s * s;
    const double d = 1.0 + s2;
    for (std::size_t i = 0; i < q; ++i) {
      out[i] = 2.0 * x[i] / d;
    }
    out[q] = (s2 - 1.0) / d;
  } else {
    // Rewrite in terms of u = 1 / |x| so that |x|^2 never overflows.
    const double u = 1.0 / s;
    const double u2 = u * u;
    const double d = 1.0 + u2;
    for (std::size_t i = 0; i < q; ++i) {
      out[i] = 2.0 * (x[i] / s) * u / d;
    }
    out[q] = (1.0 - u2) / d;
  }
  return SpherePoint(Point(std::move(out)));
}

Point stereo_project(const SpherePoint& p, double pole_epsilon) {
  const Point& z = p.ambient();
  const std::size_t q = z.dim() - 1;
  const double t = z[q];
  if (1.0 - t <= pole_epsilon) {
    throw PoleError("stereographic projection is undefined at the north pole");
  }
  double zsq = 0.0;
  for (std::size_t i = 0; i < q; ++i) {
    zsq += z[i] * z[i];
  }
  // Near the north pole 1 - t cancels; |z'|^2 / (1 + t) is the same quantity
  // on the sphere without the cancellation.
  const double denom = (t > 0.0 && zsq > 0.0) ? zsq / (1.0 + t) : 1.0 - t;
  std::vector<double> out(q);
  for (std::size_t i = 0; i < q; ++i) {
    out[i] = z[i] / denom;
  }
  return Point(std::move(out));
}

Point beta(const Point& y, BetaVariant variant) {
  const double r = y.norm();
  // Slack of a few ulps so that invert(x) with |x| = 2 is accepted.
  if (r > 0.5 * (1.0 + 1e-12)) {
    throw DomainError("beta is defined on the closed ball of radius 1/2");
  }
  const std::size_t q = y.dim();
  const double r2 = r * r;
  const double d = 1.0 + r2;
  std::vector<double> out(q + 1);
  switch (variant) {
    case BetaVariant::Verbatim:
    case BetaVariant::Projected:
      for (std::size_t i = 0; i < q; ++i) {
        out[i] = y[i] / d;
      }
      out[q] = (1.0 - r) / d;
      break;
    case BetaVariant::Renormalized:
      for (std::size_t i = 0; i < q; ++i) {
        out[i] = 2.0 * y[i] / d;
      }
      out[q] = (1.0 - r2) / d;
      break;
  }
  if (variant == BetaVariant::Projected) {
    const double n = norm(out);
    for (double& c : out) {
      c /= n;
    }
  }
  return Point(std::move(out));
}

double sphere_defect(const Point& p) { return std::abs(p.norm() - 1.0); }

ClaimBounds claim_lip1_bounds(const Point& x, const Point& x_prime) {
  const double r = x.norm();
  const double rp = x_prime.norm();
  if (r < kOriginEpsilon) {
    throw OriginError("claim bounds need |x| > 0");
  }
  if (!(rp > r)) {
    throw DomainError("claim bounds need |x'| > |x|");
  }
  ClaimBounds b;
  b.c = rp / r - 1.0;
  b.lower = b.c * rp / (1.0 + b.c);
  b.upper = (2.0 + b.c) * rp / (1.0 + b.c);
  b.distance = distance(x_prime, x);
  // Attainment cases (collinear, antipodal) sit exactly on a bound, so allow
  // for the last-bit rounding of the three quotients.
  constexpr double slack = 1e-12;
  b.holds = b.lower <= b.distance * (1.0 + slack) && b.distance <= b.upper * (1.0 + slack);
  return b;
}

double e_E_residual(const Point& x1, const Point& x2) {
  const Point y1 = invert(x1);
  const Point y2 = invert(x2);
  const double e = distance(x1, x2);
  const double big_e = distance(y1, y2);
  const double predicted = y1.norm() * y2.norm() * e;
  return std::abs(big_e - predicted) / std::max(big_e, kResidualFloor);
}

double law_of_cosines_residual(const Point& x1, const Point& x2) {
  double r1 = x1.norm();
  double r2 = x2.norm();
  if (r1 < kOriginEpsilon || r2 < kOriginEpsilon) {
    throw OriginError("law of cosines residual needs nonzero points");
  }
  if (r1 < r2) {
    std::swap(r1, r2);
  }
  const double cos_full = std::clamp(dot(x1, x2) / (r1 * r2), -1.0, 1.0);
  const double half = std::acos(cos_full) / 2.0;
  const double c = std::cos(half);
  const double s = std::sin(half);
  const double e = distance(x1, x2);
  const double lhs = e * e;
  const double rhs = (r1 - r2) * (r1 - r2) * c * c + (r1 + r2) * (r1 + r2) * s * s;
  return std::abs(lhs - rhs) / std::max(lhs, kResidualFloor);
}

namespace {

// Orthonormal frame of R^q whose first vector is x / |x|, completed by
// Gram-Schmidt over the standard basis.
std::vector<Eigen::VectorXd> radial_frame(const Point& x) {
  const auto q = static_cast<Eigen::Index>(x.dim());
  std::vector<Eigen::VectorXd> frame;
  Eigen::VectorXd first(q);
  for (Eigen::Index i = 0; i < q; ++i) {
    first[i] = x[static_cast<std::size_t>(i)];
  }
  frame.push_back(first.normalized());
  for (Eigen::Index k = 0; k < q && static_cast<Eigen::Index>(frame.size()) < q; ++k) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(q, k);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& f : frame) {
        v -= f.dot(v) * f;
      }
    }
    if (v.norm() > 1e-8) {
      frame.push_back(v.normalized());
    }
  }
  return frame;
}

Point offset(const Point& x, const Eigen::VectorXd& dir, double h) {
  std::vector<double> c(x.coords().begin(), x.coords().end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] += h * dir[static_cast<Eigen::Index>(i)];
  }
  return Point(std::move(c));
}

}  // namespace

double inversion_derivative_norm(const Point& x, double h) {
  const double r = x.norm();
  if (r < kOriginEpsilon) {
    throw OriginError("derivative of the inversion is undefined at the origin");
  }
  if (!(h > 0.0) || h > 1e-4 * r) {
    throw DomainError("finite-difference step must satisfy 0 < h <= 1e-4 |x|");
  }
  const auto q = static_cast<Eigen::Index>(x.dim());
  const auto frame = radial_frame(x);
  Eigen::MatrixXd jac(q, q);
  for (Eigen::Index k = 0; k < q; ++k) {
    const Point plus = invert(offset(x, frame[static_cast<std::size_t>(k)], h));
    const Point minus = invert(offset(x, frame[static_cast<std::size_t>(k)], -h));
    for (Eigen::Index i = 0; i < q; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      jac(i, k) = (plus[ui] - minus[ui]) / (2.0 * h);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  return svd.singularValues()[0];
}

}  // namespace bilipkit
