#include "bilipkit/cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bilipkit/errors.hpp"
#include "bilipkit/transforms.hpp"

namespace bilipkit {

namespace {

constexpr std::size_t kMaxDirections = 10'000;
constexpr double kBandRoundoff = 1e-12;

bool in_log_band(double r, double center, double band) {
  if (r <= 0.0) {
    return false;
  }
  return std::abs(std::log(r) - std::log(center)) <= band + kBandRoundoff;
}

ShellConfig mirrored(const ShellConfig& shell) {
  ShellConfig m = shell;
  if (m.mode == ShellConfig::Mode::LogBand) {
    m.center = 1.0 / shell.center;
  }
  return m;
}

}  // namespace

std::string_view to_string(ConeKind k) {
  return k == ConeKind::AtOrigin ? "origin" : "infinity";
}

ShellConfig ShellConfig::fractional(double fraction, std::size_t min_count) {
  ShellConfig s;
  s.mode = Mode::Fraction;
  s.fraction = fraction;
  s.min_count = min_count;
  return s;
}

ShellConfig ShellConfig::log_band(double center, double band) {
  ShellConfig s;
  s.mode = Mode::LogBand;
  s.center = center;
  s.band = band;
  return s;
}

std::vector<std::size_t> select_shell(const PointCloud& cloud, ConeKind kind,
                                      const ShellConfig& shell) {
  std::vector<double> radii(cloud.size());
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    radii[i] = cloud[i].norm();
    if (radii[i] > 0.0) {
      candidates.push_back(i);
    }
  }
  std::vector<std::size_t> chosen;
  if (shell.mode == ShellConfig::Mode::LogBand) {
    if (!(shell.center > 0.0) || !(shell.band >= 0.0)) {
      throw DomainError("log-band shell needs center > 0 and band >= 0");
    }
    std::copy_if(candidates.begin(), candidates.end(), std::back_inserter(chosen),
                 [&](std::size_t i) { return in_log_band(radii[i], shell.center, shell.band); });
    return chosen;
  }
  if (!(shell.fraction > 0.0 && shell.fraction <= 1.0)) {
    throw DomainError("shell fraction must lie in (0, 1]");
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    return kind == ConeKind::AtOrigin ? radii[a] < radii[b] : radii[a] > radii[b];
  });
  const auto wanted = static_cast<std::size_t>(
      std::ceil(shell.fraction * static_cast<double>(candidates.size())));
  const std::size_t k = std::min(candidates.size(), std::max(shell.min_count, wanted));
  chosen.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

DirectionSet asymptotic_directions(const PointCloud& cloud, ConeKind kind,
                                   const ShellConfig& shell) {
  DirectionSet out;
  out.kind = kind;
  for (std::size_t i : select_shell(cloud, kind, shell)) {
    const double r = cloud[i].norm();
    out.directions.push_back(cloud[i] / r);
    out.source_radii.push_back(r);
  }
  if (out.size() < 2) {
    throw InsufficientPoints("asymptotic directions at " + std::string(to_string(kind)) +
                             " need at least 2 usable shell points, found " +
                             std::to_string(out.size()));
  }
  return out;
}

LinkSlice link(const PointCloud& cloud, double radius, double band, BandConvention convention) {
  if (!(radius > 0.0) || !(band >= 0.0 && band < 1.0)) {
    throw DomainError("link needs R > 0 and 0 <= band < 1");
  }
  LinkSlice slice{PointCloud::empty(cloud.dim(), cloud.label()), {}, radius, band, convention};
  std::vector<Point> kept;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const double r = cloud[i].norm();
    const bool inside = convention == BandConvention::Log
                            ? in_log_band(r, radius, band)
                            : std::abs(r - radius) <= (band + kBandRoundoff) * radius;
    if (inside) {
      kept.push_back(cloud[i]);
      slice.indices.push_back(i);
    }
  }
  if (kept.empty()) {
    throw InsufficientPoints("link at radius " + std::to_string(radius) + " is empty");
  }
  slice.points = PointCloud(std::move(kept), cloud.label());
  return slice;
}

PointCloud cone_over(const DirectionSet& dirs, std::span<const double> radii) {
  if (dirs.directions.empty() || radii.empty()) {
    throw InsufficientPoints("cone needs at least one direction and one radius");
  }
  std::vector<Point> out;
  const bool has_zero = std::any_of(radii.begin(), radii.end(), [](double t) {
    if (!(t >= 0.0)) {
      throw DomainError("cone radii must be non-negative");
    }
    return t == 0.0;
  });
  if (has_zero) {
    out.push_back(Point::zero(dirs.dim()));
  }
  for (const Point& u : dirs.directions) {
    for (double t : radii) {
      if (t > 0.0) {
        out.push_back(u * t);
      }
    }
  }
  return PointCloud(std::move(out), "cone");
}

double angle_between(const Point& u, const Point& v) {
  // The arccos of the dot product loses half the digits near 0 and pi.
  return 2.0 * std::atan2(distance(u, v), (u + v).norm());
}

double angular_hausdorff(const DirectionSet& a, const DirectionSet& b) {
  if (a.directions.empty() || b.directions.empty()) {
    throw InsufficientPoints("angular Hausdorff distance of an empty direction set");
  }
  if (a.dim() != b.dim()) {
    throw DomainError("direction sets live in different dimensions");
  }
  if (a.size() > kMaxDirections || b.size() > kMaxDirections) {
    throw DomainError("direction sets are capped at 10^4 directions");
  }
  const auto directed = [](const DirectionSet& from, const DirectionSet& to) {
    double sup = 0.0;
    for (const Point& u : from.directions) {
      double inf = std::numeric_limits<double>::infinity();
      for (const Point& v : to.directions) {
        inf = std::min(inf, angle_between(u, v));
      }
      sup = std::max(sup, inf);
    }
    return sup;
  };
  return std::max(directed(a, b), directed(b, a));
}

PointCloud invert_cloud(const PointCloud& cloud) {
  std::vector<Point> out;
  out.reserve(cloud.size());
  for (const Point& p : cloud.points()) {
    if (!p.is_zero()) {
      out.push_back(invert(p));
    }
  }
  if (out.empty()) {
    return PointCloud::empty(cloud.dim(), cloud.label());
  }
  return PointCloud(std::move(out), cloud.label());
}

ConeExchangeResidual verify_cone_exchange(const PointCloud& cloud, const ShellConfig& shell,
                                          const ShellConfig* inverted_shell) {
  const PointCloud inverted = invert_cloud(cloud);
  const ShellConfig& inv_shell = inverted_shell ? *inverted_shell : shell;
  // Log bands: the infinity side is centred at `center`, the origin side at
  // 1/center, and inversion swaps the two.
  const auto term = [&](ConeKind kind, const ShellConfig& own,
                        const ShellConfig& other) -> std::optional<double> {
    std::optional<DirectionSet> mine;
    try {
      mine = asymptotic_directions(cloud, kind, own);
    } catch (const InsufficientPoints&) {
      return std::nullopt;
    }
    const ConeKind swapped = kind == ConeKind::AtOrigin ? ConeKind::AtInfinity : ConeKind::AtOrigin;
    return angular_hausdorff(*mine, asymptotic_directions(inverted, swapped, other));
  };
  ConeExchangeResidual out;
  out.inf_to_origin = term(ConeKind::AtInfinity, shell, mirrored(inv_shell));
  out.origin_to_inf = term(ConeKind::AtOrigin, mirrored(shell), inv_shell);
  return out;
}

double compare_cones(const PointCloud& a, const PointCloud& b, ConeKind kind,
                     const ShellConfig& shell) {
  if (a.dim() != b.dim()) {
    throw DomainError("cone comparison needs clouds of the same dimension");
  }
  return angular_hausdorff(asymptotic_directions(a, kind, shell),
                           asymptotic_directions(b, kind, shell));
}

}  // namespace bilipkit
