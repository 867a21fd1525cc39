#include "bilipkit/registry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bilipkit/errors.hpp"
#include "bilipkit/rng.hpp"

namespace bilipkit {

namespace {

Point unit_vector(std::size_t dim, std::size_t k) {
  std::vector<double> c(dim, 0.0);
  c[k] = 1.0;
  return Point(std::move(c));
}

Point random_direction(Rng& rng, std::size_t dim) {
  if (dim == 1) {
    return Point({rng.uniform() < 0.5 ? -1.0 : 1.0});
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

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

SampledMap sample_analytic(const AnalyticMap& f, const SamplerConfig& cfg) {
  if (cfg.dim != f.dim_in) {
    throw DomainError("sampler dimension " + std::to_string(cfg.dim) + " does not match map '" +
                      f.name + "' input dimension " + std::to_string(f.dim_in));
  }
  if (!(cfg.r_min > 0.0) || !(cfg.r_min <= cfg.r_max) || !std::isfinite(cfg.r_max)) {
    throw DomainError("sampler radii need 0 < r_min <= r_max < inf");
  }
  // Tiny slack: shell endpoints are usually given as the same literals.
  if (cfg.r_min < f.domain_r_min * (1.0 - 1e-12) || cfg.r_max > f.domain_r_max * (1.0 + 1e-12)) {
    throw DomainError("sampler radii leave the domain of '" + f.name + "'");
  }
  const bool with_origin = cfg.include_origin && f.fixes_origin;
  const std::size_t probes =
      cfg.probes_per_direction * f.probe_directions.size();
  if (cfg.count < 2 || probes + (with_origin ? 1 : 0) > cfg.count) {
    throw DomainError("sampler count too small for the requested origin/probe points");
  }

  std::vector<Point> domain;
  domain.reserve(cfg.count);
  if (with_origin) {
    domain.push_back(Point::zero(cfg.dim));
  }
  const double log_span = std::log(cfg.r_max / cfg.r_min);
  for (const Point& u : f.probe_directions) {
    for (std::size_t k = 0; k < cfg.probes_per_direction; ++k) {
      const double frac =
          (static_cast<double>(k) + 0.5) / static_cast<double>(cfg.probes_per_direction);
      const double r = cfg.r_min * std::exp(frac * log_span);
      domain.push_back(u * (k % 2 == 0 ? r : -r));
    }
  }
  Rng rng(cfg.seed);
  while (domain.size() < cfg.count) {
    const double r = cfg.r_min * std::exp(rng.uniform() * log_span);
    domain.push_back(random_direction(rng, cfg.dim) * r);
  }

  std::vector<Point> codomain;
  codomain.reserve(domain.size());
  for (const Point& x : domain) {
    codomain.push_back(f(x));
  }

  MapFlags flags;
  flags.ambient = Ambient::Affine;
  flags.fixes_origin = with_origin;
  flags.avoids_origin = !with_origin;
  flags.unbounded_domain = cfg.unbounded_domain;
  return SampledMap(PointCloud(std::move(domain), f.name + ":domain"),
                    PointCloud(std::move(codomain), f.name + ":codomain"), flags);
}

AnalyticMap identity_map(std::size_t dim) {
  AnalyticMap f;
  f.name = "identity";
  f.dim_in = f.dim_out = dim;
  f.evaluate = [](const Point& x) { return x; };
  f.true_bilip_constant = 1.0;
  f.fixes_origin = true;
  return f;
}

AnalyticMap scaling_map(double lambda, std::size_t dim) {
  if (!(lambda > 0.0)) {
    throw DomainError("scaling factor must be positive");
  }
  AnalyticMap f;
  f.name = "scaling-" + format_number(lambda);
  f.dim_in = f.dim_out = dim;
  f.evaluate = [lambda](const Point& x) { return x * lambda; };
  f.true_bilip_constant = std::max(lambda, 1.0 / lambda);
  f.fixes_origin = true;
  return f;
}

AnalyticMap linear_map(std::string name, std::vector<std::vector<double>> rows, double constant,
                       std::vector<Point> probe_directions) {
  const std::size_t n = rows.size();
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw DomainError("linear map matrix must be square");
    }
  }
  AnalyticMap f;
  f.name = std::move(name);
  f.dim_in = f.dim_out = n;
  f.evaluate = [rows = std::move(rows)](const Point& x) {
    std::vector<double> out(rows.size(), 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        out[i] += rows[i][j] * x[j];
      }
    }
    return Point(std::move(out));
  };
  f.true_bilip_constant = constant;
  f.fixes_origin = true;
  f.probe_directions = std::move(probe_directions);
  return f;
}

AnalyticMap diagonal_map_1_3() {
  return linear_map("linear-diag-1-3", {{1.0, 0.0}, {0.0, 3.0}}, 3.0,
                    {unit_vector(2, 0), unit_vector(2, 1)});
}

AnalyticMap rotated_stretch_map() {
  const double c = std::cos(std::numbers::pi / 6.0);
  const double s = std::sin(std::numbers::pi / 6.0);
  // R * diag(2, 1/2): right singular vectors are the coordinate axes.
  return linear_map("linear-rotated-2", {{2.0 * c, -0.5 * s}, {2.0 * s, 0.5 * c}}, 2.0,
                    {unit_vector(2, 0), unit_vector(2, 1)});
}

AnalyticMap shear_map() {
  // S^T S = [[5/4, 1/2], [1/2, 1]] has eigenvalues (9 +- sqrt 17) / 8; det S = 1,
  // so |S| = |S^-1| = sqrt((9 + sqrt 17) / 8) = (1 + sqrt 17) / 4.
  const double root17 = std::sqrt(17.0);
  const double lambda_max = (9.0 + root17) / 8.0;
  const double lambda_min = (9.0 - root17) / 8.0;
  const auto eigvec = [](double lambda) {
    const double a = 0.5;
    const double b = lambda - 1.25;
    const double n = std::hypot(a, b);
    return Point({a / n, b / n});
  };
  return linear_map("shear", {{1.0, 0.0}, {0.5, 1.0}}, (1.0 + root17) / 4.0,
                    {eigvec(lambda_max), eigvec(lambda_min)});
}

AnalyticMap radial_power_map(double t, std::size_t dim) {
  if (!(t >= 1.0)) {
    throw DomainError("radial power map needs t >= 1");
  }
  AnalyticMap f;
  f.name = "radial-" + format_number(t);
  f.dim_in = f.dim_out = dim;
  f.evaluate = [t](const Point& x) { return x * std::pow(x.norm(), t - 1.0); };
  // Radial stretch t r^(t-1) dominates the angular stretch r^(t-1) for t >= 1,
  // and both are >= 1 on the shell, so the constant is the radial stretch at r = 2.
  f.true_bilip_constant = t * std::pow(2.0, t - 1.0);
  f.fixes_origin = false;
  f.domain_r_min = 1.0;
  f.domain_r_max = 2.0;
  return f;
}

AnalyticMap norm_times_x_map(std::size_t dim) {
  AnalyticMap f;
  f.name = "norm-times-x";
  f.dim_in = f.dim_out = dim;
  f.evaluate = [](const Point& x) { return x * x.norm(); };
  f.fixes_origin = true;
  f.bilipschitz = false;
  f.domain_r_min = 0.0;
  f.domain_r_max = 1.0;
  return f;
}

std::vector<AnalyticMap> standard_registry() {
  return {identity_map(2),         scaling_map(0.5, 2),     scaling_map(2.0, 2),
          scaling_map(10.0, 2),    diagonal_map_1_3(),      rotated_stretch_map(),
          shear_map(),             radial_power_map(1.0, 2), radial_power_map(1.25, 2),
          norm_times_x_map(2)};
}

AnalyticMap find_registry_map(const std::string& name) {
  for (auto& f : standard_registry()) {
    if (f.name == name) {
      return f;
    }
  }
  throw DomainError("unknown registry map '" + name + "'");
}

}  // namespace bilipkit
