#include "bilipkit/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "bilipkit/errors.hpp"
#include "bilipkit/rng.hpp"

namespace bilipkit::fixtures {

namespace {

double log_spaced(std::size_t k, std::size_t n, double lo, double hi) {
  if (n == 1 || k + 1 == n) {
    return hi;
  }
  const double frac = static_cast<double>(k) / static_cast<double>(n - 1);
  return lo * std::exp(frac * std::log(hi / lo));
}

void check_range(std::size_t n, double lo, double hi) {
  if (n == 0 || !(lo > 0.0) || !(lo <= hi) || !std::isfinite(hi)) {
    throw DomainError("fixture needs n >= 1 and 0 < min <= max < inf");
  }
}

Point unit_from(Rng& rng, std::size_t dim) {
  if (dim == 0) {
    throw DomainError("dimension must be positive");
  }
  for (;;) {
    std::vector<double> c(dim);
    for (double& v : c) {
      v = rng.normal();
    }
    const double n = norm(c);
    if (n > 1e-12) {
      for (double& v : c) {
        v /= n;
      }
      return Point(std::move(c));
    }
  }
}

}  // namespace

Point random_unit(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return unit_from(rng, dim);
}

PointCloud ray_cloud(std::size_t dim, std::size_t n, double t_min, double t_max,
                     std::uint64_t seed) {
  check_range(n, t_min, t_max);
  const Point u = random_unit(dim, seed);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    pts.push_back(u * log_spaced(k, n, t_min, t_max));
  }
  return PointCloud(std::move(pts), "ray");
}

PointCloud shifted_line_cloud(std::size_t n, double t_min, double t_max, double offset) {
  check_range(n, t_min, t_max);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    pts.push_back(Point({log_spaced(k, n, t_min, t_max), offset}));
  }
  return PointCloud(std::move(pts), "shifted-line");
}

PointCloud spiral_cloud(std::size_t n, double r_min, double r_max) {
  check_range(n, r_min, r_max);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double r = log_spaced(k, n, r_min, r_max);
    const double angle = 2.0 * std::numbers::pi * std::log10(r);
    pts.push_back(Point({r * std::cos(angle), r * std::sin(angle)}));
  }
  return PointCloud(std::move(pts), "spiral");
}

PointCloud random_cloud(std::size_t dim, std::size_t n, double r_min, double r_max,
                        std::uint64_t seed) {
  check_range(n, r_min, r_max);
  Rng rng(seed);
  const double span = std::log(r_max / r_min);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double r = r_min * std::exp(rng.uniform() * span);
    pts.push_back(unit_from(rng, dim) * r);
  }
  return PointCloud(std::move(pts), "random");
}

PointCloud sphere_cloud(std::size_t dim, std::size_t n, std::uint64_t seed) {
  if (n == 0) {
    throw DomainError("fixture needs n >= 1");
  }
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    pts.push_back(unit_from(rng, dim));
  }
  return PointCloud(std::move(pts), "sphere");
}

}  // namespace bilipkit::fixtures
