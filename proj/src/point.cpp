#include "bilipkit/point.hpp"

#include <algorithm>
#include <cmath>

#include "bilipkit/errors.hpp"

namespace bilipkit {

namespace {

void check_coords(const std::vector<double>& coords) {
  if (coords.empty()) {
    throw DomainError("point must have at least one coordinate");
  }
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw DomainError("point coordinates must be finite");
    }
  }
}

void check_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DomainError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()));
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  check_coords(coords_);
}

Point::Point(std::initializer_list<double> coords) : coords_(coords) {
  check_coords(coords_);
}

Point Point::zero(std::size_t dim) {
  if (dim == 0) {
    throw DomainError("point must have at least one coordinate");
  }
  return Point(std::vector<double>(dim, 0.0), Unchecked{});
}

double norm(std::span<const double> v) noexcept {
  double scale = 0.0;
  for (double c : v) {
    scale = std::max(scale, std::abs(c));
  }
  if (scale == 0.0 || !std::isfinite(scale)) {
    return scale;
  }
  // Unscaled accumulation is exact enough in the well-scaled range; only
  // rescale when squares would leave the normal range.
  if (scale > 1e-150 && scale < 1e150) {
    double sum = 0.0;
    for (double c : v) {
      sum += c * c;
    }
    return std::sqrt(sum);
  }
  double sum = 0.0;
  for (double c : v) {
    const double r = c / scale;
    sum += r * r;
  }
  return scale * std::sqrt(sum);
}

double Point::norm() const noexcept { return bilipkit::norm(coords_); }

double Point::squared_norm() const noexcept {
  double sum = 0.0;
  for (double c : coords_) {
    sum += c * c;
  }
  return sum;
}

bool Point::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

Point Point::operator+(const Point& other) const {
  check_same_dim(*this, other);
  std::vector<double> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    out[i] = coords_[i] + other.coords_[i];
  }
  return Point(std::move(out));
}

Point Point::operator-(const Point& other) const {
  check_same_dim(*this, other);
  std::vector<double> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    out[i] = coords_[i] - other.coords_[i];
  }
  return Point(std::move(out));
}

Point Point::operator-() const {
  std::vector<double> out(coords_);
  for (double& c : out) {
    c = -c;
  }
  return Point(std::move(out), Unchecked{});
}

Point Point::operator*(double s) const {
  std::vector<double> out(coords_);
  for (double& c : out) {
    c *= s;
  }
  return Point(std::move(out));
}

Point Point::operator/(double s) const {
  std::vector<double> out(coords_);
  for (double& c : out) {
    c /= s;
  }
  return Point(std::move(out));
}

double dot(const Point& a, const Point& b) {
  check_same_dim(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

double distance(const Point& a, const Point& b) {
  check_same_dim(a, b);
  std::vector<double> diff(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    diff[i] = a[i] - b[i];
  }
  return norm(diff);
}

SpherePoint::SpherePoint(Point p) : point_(std::move(p)) {
  if (point_.dim() < 2) {
    throw DomainError("sphere point needs ambient dimension >= 2");
  }
  if (std::abs(point_.norm() - 1.0) > kTolerance) {
    throw DomainError("sphere point is not on the unit sphere");
  }
}

SpherePoint SpherePoint::north_pole(std::size_t q) {
  std::vector<double> c(q + 1, 0.0);
  c[q] = 1.0;
  return SpherePoint(Point(std::move(c)));
}

PointCloud::PointCloud(std::vector<Point> points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
  if (points_.empty()) {
    throw InsufficientPoints("point cloud is empty; use PointCloud::empty(dim)");
  }
  dim_ = points_.front().dim();
  for (const Point& p : points_) {
    if (p.dim() != dim_) {
      throw DomainError("point cloud mixes dimensions " + std::to_string(dim_) + " and " +
                        std::to_string(p.dim()));
    }
  }
}

PointCloud PointCloud::empty(std::size_t dim, std::string label) {
  PointCloud cloud({Point::zero(dim)}, std::move(label));
  cloud.points_.clear();
  return cloud;
}

PointCloud PointCloud::deduplicated(double tolerance) const {
  std::vector<Point> kept;
  kept.reserve(points_.size());
  for (const Point& p : points_) {
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const Point& k) {
      return distance(k, p) <= tolerance;
    });
    if (!duplicate) {
      kept.push_back(p);
    }
  }
  if (kept.empty()) {
    return empty(dim_, label_);
  }
  return PointCloud(std::move(kept), label_);
}

PointCloud PointCloud::scaled(double s) const {
  if (points_.empty()) {
    return *this;
  }
  std::vector<Point> out;
  out.reserve(points_.size());
  for (const Point& p : points_) {
    out.push_back(p * s);
  }
  return PointCloud(std::move(out), label_);
}

}  // namespace bilipkit
