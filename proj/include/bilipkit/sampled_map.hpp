#pragma once

#include <cstddef>
#include <limits>
#include <string_view>

#include "bilipkit/point.hpp"

namespace bilipkit {

enum class Ambient { Affine, Sphere };

std::string_view to_string(Ambient a);
/// Parses "Affine" / "Sphere" (case-sensitive). Throws ParseError otherwise.
Ambient ambient_from_string(std::string_view s);

inline constexpr double kOriginGuard = 1e-9;

struct MapFlags {
  bool fixes_origin = false;
  bool avoids_origin = false;
  bool unbounded_domain = false;
  Ambient ambient = Ambient::Affine;

  friend bool operator==(const MapFlags&, const MapFlags&) = default;
};

/// A homeomorphism W1 -> W2 given by samples: codomain[i] is the image of
/// domain[i]. Immutable once constructed.
///
/// Invariants (HypothesisError on violation):
///  - |domain| = |codomain| >= 2;
///  - fixes_origin: exactly one domain point is 0 and its image is 0;
///  - avoids_origin: no domain or codomain point within kOriginGuard of 0;
///  - Affine ambient: exactly one of fixes_origin / avoids_origin;
///  - Sphere ambient: every point is a unit vector within SpherePoint::kTolerance.
class SampledMap {
 public:
  SampledMap(PointCloud domain, PointCloud codomain, MapFlags flags);

  /// Builds an affine map, computing fixes_origin / avoids_origin from the
  /// samples.
  static SampledMap with_inferred_origin(PointCloud domain, PointCloud codomain,
                                         bool unbounded_domain);

  const PointCloud& domain() const noexcept { return domain_; }
  const PointCloud& codomain() const noexcept { return codomain_; }
  const MapFlags& flags() const noexcept { return flags_; }
  std::size_t size() const noexcept { return domain_.size(); }
  std::size_t domain_dim() const noexcept { return domain_.dim(); }
  std::size_t codomain_dim() const noexcept { return codomain_.dim(); }

  /// The map with domain and codomain exchanged. Origin flags carry over; the
  /// unbounded flag is kept as given (it describes the sampled set, which the
  /// inverse of a homeomorphism between unbounded sets also has).
  SampledMap inverse() const;

 private:
  PointCloud domain_;
  PointCloud codomain_;
  MapFlags flags_;
};

/// Conjugation by the inversions: every pair (x, f(x)) becomes
/// (invert(x), invert(f(x))). An origin pair is dropped; when the domain is
/// unbounded the pair (0, 0) is appended. The result's unbounded flag is the
/// input's fixes_origin flag.
SampledMap invert_map(const SampledMap& m);

/// Conjugation by the inverse stereographic projections. When the domain is
/// unbounded, the pair (N_q1, N_q2) is appended.
SampledMap compactify_map(const SampledMap& m);

/// Keeps the pairs whose domain point satisfies r <= |x| < R (closed at R when
/// R is infinite). Throws EmptyRestriction if fewer than two pairs survive.
SampledMap restrict_map(const SampledMap& m, double r,
                        double big_r = std::numeric_limits<double>::infinity());

}  // namespace bilipkit
