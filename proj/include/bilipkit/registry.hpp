#pragma once

#include <cstddef>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bilipkit/point.hpp"
#include "bilipkit/sampled_map.hpp"

namespace bilipkit {

/// A closed-form map with (when known) its exact bi-Lipschitz constant. Used
/// as an oracle for the estimators.
struct AnalyticMap {
  std::string name;
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;
  std::function<Point(const Point&)> evaluate;
  /// Exact constant A with (1/A)|x - x'| <= |f(x) - f(x')| <= A|x - x'| on the
  /// radial domain below. Absent for maps that are not bi-Lipschitz.
  std::optional<double> true_bilip_constant;
  bool fixes_origin = false;
  bool bilipschitz = true;
  /// The map is only claimed on domain_r_min <= |x| <= domain_r_max.
  double domain_r_min = 0.0;
  double domain_r_max = std::numeric_limits<double>::infinity();
  /// Directions along which the extremal ratios are attained (right singular
  /// vectors for linear maps). Used by stratified sampling.
  std::vector<Point> probe_directions;

  Point operator()(const Point& x) const { return evaluate(x); }
  bool globally_defined() const { return domain_r_min == 0.0 && std::isinf(domain_r_max); }
};

struct SamplerConfig {
  std::size_t count = 1000;
  double r_min = 1e-2;
  double r_max = 1e2;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  /// Adds the pair (0, f(0)) when the map fixes the origin. Counts toward `count`.
  bool include_origin = false;
  /// Value of the unbounded_domain flag on the sampled map.
  bool unbounded_domain = false;
  /// Points placed on +-r u for each probe direction u (0 disables stratification).
  std::size_t probes_per_direction = 0;
};

/// Samples `f` at log-uniform radii in [r_min, r_max] times uniform
/// directions. Deterministic in `cfg.seed`.
SampledMap sample_analytic(const AnalyticMap& f, const SamplerConfig& cfg);

AnalyticMap identity_map(std::size_t dim);
AnalyticMap scaling_map(double lambda, std::size_t dim);
/// x -> M x for a square invertible M given row-major; `constant` is
/// max(sigma_max, 1 / sigma_min), supplied by the caller.
AnalyticMap linear_map(std::string name, std::vector<std::vector<double>> rows, double constant,
                       std::vector<Point> probe_directions);
AnalyticMap diagonal_map_1_3();
/// Rotation by pi/6 composed with diag(2, 1/2).
AnalyticMap rotated_stretch_map();
/// (x, y) -> (x, y + x/2).
AnalyticMap shear_map();
/// x -> |x|^(t-1) x on the shell 1 <= |x| <= 2.
AnalyticMap radial_power_map(double t, std::size_t dim);
/// x -> |x| x on the unit ball: fixes the origin but is not bi-Lipschitz there.
AnalyticMap norm_times_x_map(std::size_t dim);

/// Every registry map, in dimension 2.
std::vector<AnalyticMap> standard_registry();

/// Looks a map up by name in `standard_registry()`. Throws DomainError if unknown.
AnalyticMap find_registry_map(const std::string& name);

}  // namespace bilipkit
