#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bilipkit/point.hpp"

namespace bilipkit {

enum class ConeKind { AtOrigin, AtInfinity };

std::string_view to_string(ConeKind k);

/// Finite approximation of an asymptotic set S^0 or S^inf: unit vectors x/|x|
/// and the radii |x| they came from.
struct DirectionSet {
  std::vector<Point> directions;
  std::vector<double> source_radii;
  ConeKind kind = ConeKind::AtInfinity;

  std::size_t size() const noexcept { return directions.size(); }
  std::size_t dim() const { return directions.empty() ? 0 : directions.front().dim(); }
};

/// Which points of a cloud stand in for "x -> 0" or "|x| -> inf".
struct ShellConfig {
  enum class Mode { Fraction, LogBand };
  Mode mode = Mode::Fraction;
  /// Fraction mode: the innermost (AtOrigin) or outermost (AtInfinity)
  /// max(min_count, ceil(fraction * n)) nonzero points.
  double fraction = 0.1;
  std::size_t min_count = 8;
  /// LogBand mode: points with |log|x| - log center| <= band.
  double center = 1.0;
  double band = 0.0;

  static ShellConfig fractional(double fraction = 0.1, std::size_t min_count = 8);
  static ShellConfig log_band(double center, double band);
};

/// Indices (into `cloud`) of the shell points, in cloud order.
std::vector<std::size_t> select_shell(const PointCloud& cloud, ConeKind kind,
                                      const ShellConfig& shell);

/// Normalised directions of the shell points. Exact zeros are skipped.
/// Throws InsufficientPoints if fewer than 2 usable points remain.
DirectionSet asymptotic_directions(const PointCloud& cloud, ConeKind kind,
                                   const ShellConfig& shell = {});

enum class BandConvention { Log, Linear };

/// Points of a cloud near the sphere of radius R.
struct LinkSlice {
  PointCloud points;
  /// Indices of the retained points in the source cloud.
  std::vector<std::size_t> indices;
  double radius = 1.0;
  double band = 0.0;
  BandConvention convention = BandConvention::Log;
};

/// Keeps the points with |log|x| - log R| <= band (Log) or
/// | |x| - R | <= band R (Linear). A relative roundoff allowance of 1e-12 is
/// added to the band. Throws InsufficientPoints if nothing is retained.
LinkSlice link(const PointCloud& cloud, double radius, double band,
               BandConvention convention = BandConvention::Log);

/// {t u : u in dirs, t in radii}; the origin appears once iff 0 is in radii.
PointCloud cone_over(const DirectionSet& dirs, std::span<const double> radii);

/// Angle between two unit vectors, 2 atan2(|u - v|, |u + v|).
double angle_between(const Point& u, const Point& v);

/// Symmetric Hausdorff distance between two direction sets in the angular
/// metric. Brute force; each set is capped at 10^4 directions.
double angular_hausdorff(const DirectionSet& a, const DirectionSet& b);

/// Pointwise inversion of a cloud; exact zeros are dropped.
PointCloud invert_cloud(const PointCloud& cloud);

/// A term is empty when the cloud has fewer than 2 points in the
/// corresponding shell of the cloud itself (nothing to compare).
struct ConeExchangeResidual {
  /// Distance between S^inf of the cloud and S^0 of its inversion.
  std::optional<double> inf_to_origin;
  /// Distance between S^0 of the cloud and S^inf of its inversion.
  std::optional<double> origin_to_inf;
};

/// Checks that inversion exchanges the asymptotic sets at 0 and at infinity.
/// With a log-band shell, the infinity side of `cloud` is the band around
/// `center` and its origin side the band around 1/center; the inverted cloud
/// is read through the mirrored bands.
/// `inverted_shell`, when given, overrides the shell used on the inverted
/// cloud (mismatched-shell diagnostics).
ConeExchangeResidual verify_cone_exchange(const PointCloud& cloud, const ShellConfig& shell,
                                          const ShellConfig* inverted_shell = nullptr);

/// Angular Hausdorff distance between the asymptotic sets of two clouds.
double compare_cones(const PointCloud& a, const PointCloud& b, ConeKind kind,
                     const ShellConfig& shell = {});

}  // namespace bilipkit
