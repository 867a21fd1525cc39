#include "bilipkit/sampled_map.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "bilipkit/errors.hpp"
#include "bilipkit/transforms.hpp"

namespace bilipkit {

std::string_view to_string(Ambient a) {
  return a == Ambient::Affine ? "Affine" : "Sphere";
}

Ambient ambient_from_string(std::string_view s) {
  if (s == "Affine") {
    return Ambient::Affine;
  }
  if (s == "Sphere") {
    return Ambient::Sphere;
  }
  throw ParseError("unknown ambient '" + std::string(s) + "' (expected Affine or Sphere)");
}

namespace {

void validate(const PointCloud& domain, const PointCloud& codomain, const MapFlags& flags) {
  if (domain.size() != codomain.size()) {
    throw HypothesisError("domain and codomain sample counts differ (" +
                          std::to_string(domain.size()) + " vs " +
                          std::to_string(codomain.size()) + ")");
  }
  if (domain.size() < 2) {
    throw HypothesisError("a sampled map needs at least 2 pairs");
  }
  if (flags.ambient == Ambient::Sphere) {
    for (const PointCloud* cloud : {&domain, &codomain}) {
      for (const Point& p : cloud->points()) {
        if (sphere_defect(p) > SpherePoint::kTolerance) {
          throw HypothesisError("sphere ambient: sample is not a unit vector");
        }
      }
    }
    return;
  }
  if (flags.fixes_origin == flags.avoids_origin) {
    throw HypothesisError(
        "origin hypothesis: exactly one of fixes_origin / avoids_origin must hold");
  }
  if (flags.fixes_origin) {
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (domain[i].is_zero()) {
        ++zeros;
        if (!codomain[i].is_zero()) {
          throw HypothesisError("fixes_origin: the image of the origin is not the origin");
        }
      }
    }
    if (zeros != 1) {
      throw HypothesisError("fixes_origin: expected exactly one domain point at the origin, found " +
                            std::to_string(zeros));
    }
  } else {
    for (const PointCloud* cloud : {&domain, &codomain}) {
      for (const Point& p : cloud->points()) {
        if (p.norm() <= kOriginGuard) {
          throw HypothesisError("avoids_origin: a sample lies within the origin guard");
        }
      }
    }
  }
}

bool near_origin(const Point& p) { return p.norm() <= kOriginGuard; }

}  // namespace

SampledMap::SampledMap(PointCloud domain, PointCloud codomain, MapFlags flags)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), flags_(flags) {
  validate(domain_, codomain_, flags_);
}

SampledMap SampledMap::with_inferred_origin(PointCloud domain, PointCloud codomain,
                                            bool unbounded_domain) {
  MapFlags flags;
  flags.unbounded_domain = unbounded_domain;
  bool has_zero = false;
  bool any_near = false;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    has_zero = has_zero || domain[i].is_zero();
    any_near = any_near || near_origin(domain[i]);
    if (i < codomain.size()) {
      any_near = any_near || near_origin(codomain[i]);
    }
  }
  flags.fixes_origin = has_zero;
  flags.avoids_origin = !any_near;
  return SampledMap(std::move(domain), std::move(codomain), flags);
}

SampledMap SampledMap::inverse() const { return SampledMap(codomain_, domain_, flags_); }

SampledMap invert_map(const SampledMap& m) {
  if (m.flags().ambient != Ambient::Affine) {
    throw HypothesisError("invert_map needs an affine map");
  }
  std::vector<Point> dom;
  std::vector<Point> cod;
  dom.reserve(m.size() + 1);
  cod.reserve(m.size() + 1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Point& x = m.domain()[i];
    const Point& y = m.codomain()[i];
    if (x.is_zero()) {
      continue;
    }
    if (y.is_zero()) {
      throw HypothesisError("a nonzero domain point is mapped to the origin");
    }
    dom.push_back(invert(x));
    cod.push_back(invert(y));
  }
  if (m.flags().unbounded_domain) {
    dom.push_back(Point::zero(m.domain_dim()));
    cod.push_back(Point::zero(m.codomain_dim()));
  }
  if (dom.empty()) {
    throw HypothesisError("a sampled map needs at least 2 pairs");
  }
  MapFlags flags;
  flags.ambient = Ambient::Affine;
  flags.fixes_origin = m.flags().unbounded_domain;
  flags.avoids_origin = !m.flags().unbounded_domain;
  flags.unbounded_domain = m.flags().fixes_origin;
  return SampledMap(PointCloud(std::move(dom), m.domain().label()),
                    PointCloud(std::move(cod), m.codomain().label()), flags);
}

SampledMap compactify_map(const SampledMap& m) {
  if (m.flags().ambient != Ambient::Affine) {
    throw HypothesisError("compactify_map needs an affine map");
  }
  std::vector<Point> dom;
  std::vector<Point> cod;
  dom.reserve(m.size() + 1);
  cod.reserve(m.size() + 1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    dom.push_back(stereo_embed(m.domain()[i]).ambient());
    cod.push_back(stereo_embed(m.codomain()[i]).ambient());
  }
  if (m.flags().unbounded_domain) {
    dom.push_back(SpherePoint::north_pole(m.domain_dim()).ambient());
    cod.push_back(SpherePoint::north_pole(m.codomain_dim()).ambient());
  }
  MapFlags flags;
  flags.ambient = Ambient::Sphere;
  return SampledMap(PointCloud(std::move(dom), m.domain().label()),
                    PointCloud(std::move(cod), m.codomain().label()), flags);
}

SampledMap restrict_map(const SampledMap& m, double r, double big_r) {
  if (!(r >= 0.0) || !(r < big_r)) {
    throw DomainError("restriction needs 0 <= r < R");
  }
  const bool closed_right = std::isinf(big_r);
  std::vector<Point> dom;
  std::vector<Point> cod;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double radius = m.domain()[i].norm();
    const bool inside = radius >= r && (closed_right || radius < big_r);
    if (inside) {
      dom.push_back(m.domain()[i]);
      cod.push_back(m.codomain()[i]);
    }
  }
  if (dom.size() < 2) {
    throw EmptyRestriction("restriction to [" + std::to_string(r) + ", " + std::to_string(big_r) +
                           ") keeps " + std::to_string(dom.size()) + " pair(s); need 2");
  }
  PointCloud domain(std::move(dom), m.domain().label());
  PointCloud codomain(std::move(cod), m.codomain().label());
  const bool unbounded = m.flags().unbounded_domain && closed_right;
  if (m.flags().ambient == Ambient::Sphere) {
    MapFlags flags = m.flags();
    flags.unbounded_domain = unbounded;
    return SampledMap(std::move(domain), std::move(codomain), flags);
  }
  return SampledMap::with_inferred_origin(std::move(domain), std::move(codomain), unbounded);
}

}  // namespace bilipkit
