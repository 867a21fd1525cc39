#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bilipkit {

/// A point of R^q with finite coordinates, q >= 1.
class Point {
 public:
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  /// The origin of R^q.
  static Point zero(std::size_t dim);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  /// Euclidean norm, computed with scaling so that tiny and huge vectors do
  /// not under/overflow.
  double norm() const noexcept;
  double squared_norm() const noexcept;
  bool is_zero() const noexcept;

  Point operator+(const Point& other) const;
  Point operator-(const Point& other) const;
  Point operator-() const;
  Point operator*(double s) const;
  Point operator/(double s) const;

  friend Point operator*(double s, const Point& p) { return p * s; }
  friend bool operator==(const Point&, const Point&) = default;

 private:
  struct Unchecked {};
  Point(std::vector<double> coords, Unchecked) : coords_(std::move(coords)) {}

  std::vector<double> coords_;
};

double dot(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);
double norm(std::span<const double> v) noexcept;

/// A unit vector of R^{q+1}, i.e. a point of the sphere S^q.
class SpherePoint {
 public:
  static constexpr double kTolerance = 1e-9;

  /// Throws DomainError unless | |p| - 1 | <= kTolerance.
  explicit SpherePoint(Point p);

  /// North pole N_q = (0, ..., 0, 1) of S^q.
  static SpherePoint north_pole(std::size_t q);

  /// Dimension q of the sphere (the ambient dimension is q + 1).
  std::size_t sphere_dim() const noexcept { return point_.dim() - 1; }
  const Point& ambient() const noexcept { return point_; }
  double last() const noexcept { return point_[point_.dim() - 1]; }

 private:
  Point point_;
};

/// A finite sample of a subset of R^q.
class PointCloud {
 public:
  PointCloud(std::vector<Point> points, std::string label = {});

  /// Same as the constructor but for an empty cloud of known dimension.
  static PointCloud empty(std::size_t dim, std::string label = {});

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::string& label() const noexcept { return label_; }

  /// Drops every point lying within `tolerance` of an earlier point. Order of
  /// the survivors is preserved.
  PointCloud deduplicated(double tolerance = 1e-12) const;

  /// Pointwise scaling by `s`.
  PointCloud scaled(double s) const;

 private:
  std::vector<Point> points_;
  std::string label_;
  std::size_t dim_ = 0;
};

}  // namespace bilipkit
