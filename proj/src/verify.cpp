#include "bilipkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bilipkit/cones.hpp"
#include "bilipkit/distortion.hpp"
#include "bilipkit/errors.hpp"
#include "bilipkit/fixtures.hpp"
#include "bilipkit/registry.hpp"
#include "bilipkit/rng.hpp"
#include "bilipkit/transforms.hpp"

namespace bilipkit::verify {

namespace {

constexpr double kIdentityTolerance = 1e-10;
constexpr double kDerivativeTolerance = 1e-5;
constexpr double kGluingTolerance = 1e-9;
constexpr double kCubeSlack = 1e-6;
constexpr double kRadialSlack = 1e-9;
constexpr double kConsistencySlack = 1e-12;
constexpr double kDirectionTolerance = 1e-3;
constexpr double kGrowthFactor = 2.0;
constexpr std::size_t kIdentityPairs = 10'000;
constexpr std::size_t kDerivativePoints = 1'000;
constexpr std::size_t kGluingPoints = 1'000;
constexpr std::size_t kMapSamples = 500;
constexpr double kFinite = std::numeric_limits<double>::max();

// Per-check sub-streams, so adding a check never shifts another's samples.
std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Point random_point(Rng& rng, std::size_t dim, double r_min, double r_max) {
  const double r = r_min * std::exp(rng.uniform() * std::log(r_max / r_min));
  std::vector<double> c(dim);
  double n = 0.0;
  while (n < 1e-12) {
    for (double& v : c) {
      v = rng.normal();
    }
    n = norm(c);
  }
  for (double& v : c) {
    v *= r / n;
  }
  return Point(std::move(c));
}

std::string dim_tag(std::size_t q) { return " q=" + std::to_string(q); }


SampledMap sample_map(const AnalyticMap& f, std::uint64_t seed, bool include_origin,
                      bool unbounded) {
  SamplerConfig cfg;
  cfg.count = kMapSamples;
  cfg.dim = f.dim_in;
  cfg.seed = seed;
  if (f.globally_defined()) {
    cfg.r_min = 1e-2;
    cfg.r_max = 1e2;
    cfg.include_origin = include_origin;
    cfg.unbounded_domain = unbounded;
  } else {
    // Shell maps: sample the whole shell, bounded, away from the origin.
    cfg.r_min = std::max(f.domain_r_min, 1e-2);
    cfg.r_max = f.domain_r_max;
  }
  cfg.probes_per_direction = f.probe_directions.empty() ? 0 : 4;
  return sample_analytic(f, cfg);
}

SampledMap sample_non_example(double t_min, std::uint64_t seed) {
  SamplerConfig cfg;
  cfg.count = kMapSamples;
  cfg.dim = 2;
  cfg.r_min = t_min;
  cfg.r_max = 1.0;
  cfg.seed = seed;
  cfg.include_origin = true;
  return sample_analytic(norm_times_x_map(2), cfg);
}

}  // namespace

bool SuiteResult::passed() const { return first_failure() == nullptr; }

const Check* SuiteResult::first_failure() const {
  const auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
  return it == checks.end() ? nullptr : &*it;
}

void SuiteResult::add_at_most(std::string name, double measured, double tolerance) {
  checks.push_back({std::move(name), measured, tolerance, Comparison::AtMost, measured <= tolerance});
}

void SuiteResult::add_at_least(std::string name, double measured, double tolerance) {
  checks.push_back({std::move(name), measured, tolerance, Comparison::AtLeast, measured >= tolerance});
}

void SuiteResult::add_recorded(std::string name, double measured) {
  checks.push_back({std::move(name), measured, 0.0, Comparison::Recorded, true});
}

void SuiteResult::append(const SuiteResult& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

SuiteResult identities(const Options& opt) {
  SuiteResult out{"identities", opt.seed, {}};
  const double tol = opt.tolerance.value_or(kIdentityTolerance);

  for (std::size_t q : {1u, 2u, 3u, 6u}) {
    Rng rng(substream(opt.seed, 100 + q));
    double worst_e = 0.0;
    double worst_law = 0.0;
    for (std::size_t k = 0; k < kIdentityPairs; ++k) {
      const Point x1 = random_point(rng, q, 1e-3, 1e3);
      const Point x2 = random_point(rng, q, 1e-3, 1e3);
      worst_e = std::max(worst_e, e_E_residual(x1, x2));
      worst_law = std::max(worst_law, law_of_cosines_residual(x1, x2));
    }
    out.add_at_most("e_E_residual max" + dim_tag(q), worst_e, tol);
    out.add_at_most("law_of_cosines_residual max" + dim_tag(q), worst_law, tol);
  }

  {
    Rng rng(substream(opt.seed, 200));
    double worst = 0.0;
    for (std::size_t k = 0; k < kDerivativePoints; ++k) {
      const std::size_t q = 1 + k % 6;
      const Point x = random_point(rng, q, 0.1, 10.0);
      const double r = x.norm();
      const double predicted = 1.0 / (r * r);
      const double estimate = inversion_derivative_norm(x, 1e-6 * r);
      worst = std::max(worst, std::abs(estimate - predicted) / predicted);
    }
    out.add_at_most("derivative norm relative error max", worst, kDerivativeTolerance);
  }

  {
    Rng rng(substream(opt.seed, 300));
    double violations = 0.0;
    double tightest = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < kIdentityPairs; ++k) {
      const std::size_t q = std::size_t{1} << (k % 3);  // 1, 2, 4
      const Point x = random_point(rng, q, 1e-3, 1e3);
      const double ratio = 1.5 * std::exp(rng.uniform() * std::log(100.0));
      const Point xp = random_point(rng, q, 1.0, 1.0) * (ratio * x.norm());
      const ClaimBounds b = claim_lip1_bounds(x, xp);
      if (!b.holds) {
        violations += 1.0;
      }
      tightest = std::min({tightest, (b.distance - b.lower) / b.distance,
                           (b.upper - b.distance) / b.distance});
    }
    out.add_at_most("claim bounds violations over random pairs", violations, 0.0);
    out.add_recorded("claim bounds tightest relative margin", tightest);
    const ClaimBounds collinear = claim_lip1_bounds(Point({1.0, 0.0}), Point({3.0, 0.0}));
    const ClaimBounds antipodal = claim_lip1_bounds(Point({1.0, 0.0}), Point({-3.0, 0.0}));
    out.add_at_most("claim bounds collinear |distance - lower|",
                    std::abs(collinear.distance - collinear.lower), 1e-12);
    out.add_at_most("claim bounds antipodal |distance - upper|",
                    std::abs(antipodal.distance - antipodal.upper), 1e-12);
    out.add_at_least("claim bounds attainment cases hold",
                     collinear.holds && antipodal.holds ? 1.0 : 0.0, 1.0);
  }

  {
    Rng rng(substream(opt.seed, 400));
    double renormalized = 0.0;
    double verbatim = 0.0;
    double projected = 0.0;
    double defect = 0.0;
    for (std::size_t k = 0; k < kGluingPoints + 2; ++k) {
      const std::size_t q = 1 + k % 3;
      Point x = random_point(rng, q, 2.0, 1e3);
      if (k == kGluingPoints) {
        x = x * (2.0 / x.norm());
      } else if (k == kGluingPoints + 1) {
        x = x * (1e3 / x.norm());
      }
      const Point y = invert(x);
      const Point target = stereo_embed(x).ambient();
      renormalized = std::max(renormalized, distance(beta(y, BetaVariant::Renormalized), target));
      const Point raw = beta(y, BetaVariant::Verbatim);
      verbatim = std::max(verbatim, distance(raw, target));
      defect = std::max(defect, sphere_defect(raw));
      projected = std::max(projected, distance(beta(y, BetaVariant::Projected), target));
    }
    out.add_at_most("gluing residual max (renormalized chart)", renormalized, kGluingTolerance);
    out.add_recorded("gluing residual max (verbatim chart)", verbatim);
    out.add_recorded("gluing residual max (verbatim chart projected to sphere)", projected);
    out.add_recorded("sphere defect max (verbatim chart)", defect);
  }
  return out;
}

SuiteResult cube_bound(const Options& opt) {
  SuiteResult out{"cube-bound", opt.seed, {}};
  std::uint64_t tag = 1000;
  for (const AnalyticMap& f : standard_registry()) {
    ++tag;
    if (!f.bilipschitz) {
      continue;
    }
    const std::uint64_t seed = substream(opt.seed, tag);
    if (f.true_bilip_constant && f.fixes_origin && f.globally_defined()) {
      SamplerConfig cfg;
      cfg.count = kMapSamples;
      cfg.dim = f.dim_in;
      cfg.seed = seed;
      cfg.include_origin = true;
      cfg.unbounded_domain = true;
      cfg.probes_per_direction = f.probe_directions.empty() ? 0 : 4;
      const CubeBoundResult r = verify_cube_bound(f, cfg, AllPairs{});
      out.add_at_most(f.name + ": inverted constant vs A^3", r.inverted.bilip_constant,
                      r.bound + kCubeSlack);
      out.add_at_least(f.name + ": inverted radial ratio min vs 1/A^3", r.radial.min_ratio,
                       1.0 / r.bound - kRadialSlack);
      out.add_at_most(f.name + ": inverted radial ratio max vs A^3", r.radial.max_ratio,
                      r.bound + kRadialSlack);
    }
    // Inversion iff, bi-Lipschitz side: the inverted sample has finite,
    // mutually consistent constants.
    const DistortionReport inv = estimate_bilip(invert_map(sample_map(f, seed, true, true)), AllPairs{});
    out.add_at_most(f.name + ": inverted constant finite", inv.bilip_constant, kFinite);
    out.add_at_least(f.name + ": inverted L_expand * L_contract", inv.L_expand * inv.L_contract,
                     1.0 - kConsistencySlack);
  }

  // Non-bi-Lipschitz side: refining toward 0 blows up the contraction ratio
  // of x -> |x| x, and the constant of its inversion with it.
  const std::uint64_t seed = substream(opt.seed, 2000);
  const SampledMap coarse = sample_non_example(1e-2, seed);
  const SampledMap fine = sample_non_example(1e-4, seed);
  const DistortionReport coarse_r = estimate_bilip(coarse, AllPairs{});
  const DistortionReport fine_r = estimate_bilip(fine, AllPairs{});
  const DistortionReport coarse_inv = estimate_bilip(invert_map(coarse), AllPairs{});
  const DistortionReport fine_inv = estimate_bilip(invert_map(fine), AllPairs{});
  out.add_recorded("norm-times-x: L_contract at t_min=1e-2", coarse_r.L_contract);
  out.add_recorded("norm-times-x: L_contract at t_min=1e-4", fine_r.L_contract);
  out.add_at_least("norm-times-x: L_contract growth 1e-2 -> 1e-4",
                   fine_r.L_contract / coarse_r.L_contract, kGrowthFactor);
  out.add_recorded("norm-times-x: inverted constant at t_min=1e-2", coarse_inv.bilip_constant);
  out.add_recorded("norm-times-x: inverted constant at t_min=1e-4", fine_inv.bilip_constant);
  out.add_at_least("norm-times-x: inverted constant growth 1e-2 -> 1e-4",
                   fine_inv.bilip_constant / coarse_inv.bilip_constant, kGrowthFactor);
  return out;
}

SuiteResult compactify_iff(const Options& opt) {
  SuiteResult out{"compactify-iff", opt.seed, {}};
  std::uint64_t tag = 3000;
  for (const AnalyticMap& f : standard_registry()) {
    ++tag;
    if (!f.bilipschitz) {
      continue;
    }
    const SampledMap m = sample_map(f, substream(opt.seed, tag), false, true);
    const auto [original, compact] = compare_compactified(m, AllPairs{});
    const SampledMap cm = compactify_map(m);
    out.add_at_most(f.name + ": original constant finite", original.bilip_constant, kFinite);
    out.add_at_most(f.name + ": compactified constant finite", compact.bilip_constant, kFinite);
    out.add_recorded(f.name + ": compactified constant", compact.bilip_constant);
    if (m.flags().unbounded_domain) {
      const std::size_t last = cm.size() - 1;
      const bool pole_pair = cm.domain()[last] == SpherePoint::north_pole(m.domain_dim()).ambient() &&
                             cm.codomain()[last] == SpherePoint::north_pole(m.codomain_dim()).ambient();
      out.add_at_least(f.name + ": pole pair appended", pole_pair ? 1.0 : 0.0, 1.0);
    }
    if (f.name == "identity") {
      out.add_at_most("identity: |compactified constant - 1|", std::abs(compact.bilip_constant - 1.0),
                      1e-9);
    }
  }

  const std::uint64_t seed = substream(opt.seed, 4000);
  const auto coarse = compare_compactified(sample_non_example(1e-2, seed), AllPairs{});
  const auto fine = compare_compactified(sample_non_example(1e-4, seed), AllPairs{});
  out.add_at_least("norm-times-x: original constant growth 1e-2 -> 1e-4",
                   fine.original.bilip_constant / coarse.original.bilip_constant, kGrowthFactor);
  out.add_at_least("norm-times-x: compactified constant growth 1e-2 -> 1e-4",
                   fine.compactified.bilip_constant / coarse.compactified.bilip_constant,
                   kGrowthFactor);
  return out;
}

SuiteResult cone_exchange(const Options& opt) {
  SuiteResult out{"cone-exchange", opt.seed, {}};
  const double tol = opt.tolerance.value_or(kIdentityTolerance);

  struct Fixture {
    std::string name;
    PointCloud cloud;
  };
  const std::vector<Fixture> clouds = {
      {"shifted-line", fixtures::shifted_line_cloud(200, 1.0, 1e3)},
      {"ray q=2", fixtures::ray_cloud(2, 200, 1e-3, 1e3, substream(opt.seed, 5001))},
      {"ray q=3", fixtures::ray_cloud(3, 200, 1e-3, 1e3, substream(opt.seed, 5002))},
      {"spiral", fixtures::spiral_cloud(400, 1e-3, 1e3)},
      {"random q=3", fixtures::random_cloud(3, 500, 1e-3, 1e3, substream(opt.seed, 5003))},
  };
  const ShellConfig log_band = ShellConfig::log_band(1e2, 1.0);
  const ShellConfig fraction = ShellConfig::fractional();
  for (const Fixture& fx : clouds) {
    for (const auto& [mode, shell] : {std::pair{"log-band", log_band}, std::pair{"fraction", fraction}}) {
      const ConeExchangeResidual r = verify_cone_exchange(fx.cloud, shell);
      if (r.inf_to_origin) {
        out.add_at_most(fx.name + " (" + mode + "): S^inf vs inverted S^0", *r.inf_to_origin, tol);
      }
      if (r.origin_to_inf) {
        out.add_at_most(fx.name + " (" + mode + "): S^0 vs inverted S^inf", *r.origin_to_inf, tol);
      }
    }
  }

  // Outermost sample of {(t, 1)} with t_max = 10^3 already points along (1, 0).
  const DirectionSet dirs =
      asymptotic_directions(fixtures::shifted_line_cloud(200, 1.0, 1e3), ConeKind::AtInfinity);
  const auto outer = std::max_element(dirs.source_radii.begin(), dirs.source_radii.end()) -
                     dirs.source_radii.begin();
  out.add_at_most("shifted-line: outermost direction angle to (1,0)",
                  angle_between(dirs.directions[static_cast<std::size_t>(outer)], Point({1.0, 0.0})),
                  kDirectionTolerance);

  double worst = 0.0;
  const PointCloud spread = fixtures::random_cloud(4, 2000, 1e-6, 1e6, substream(opt.seed, 5004));
  for (const Point& p : spread.points()) {
    const Point ip = invert(p);
    worst = std::max(worst, angle_between(p / p.norm(), ip / ip.norm()));
  }
  out.add_at_most("direction preservation under inversion (max angle)", worst, 1e-12);
  return out;
}

SuiteResult run(std::string_view suite, const Options& opt) {
  if (suite == "identities") {
    return identities(opt);
  }
  if (suite == "cube-bound") {
    return cube_bound(opt);
  }
  if (suite == "compactify-iff") {
    return compactify_iff(opt);
  }
  if (suite == "cone-exchange") {
    return cone_exchange(opt);
  }
  if (suite == "all") {
    SuiteResult all{"all", opt.seed, {}};
    all.append(identities(opt));
    all.append(cube_bound(opt));
    all.append(compactify_iff(opt));
    all.append(cone_exchange(opt));
    return all;
  }
  throw DomainError("unknown suite '" + std::string(suite) + "'");
}

io::Json to_json(const SuiteResult& r) {
  io::Json j;
  j["schema"] = 1;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  io::Json checks = io::Json::array();
  for (const Check& c : r.checks) {
    io::Json cj;
    cj["name"] = c.name;
    cj["measured"] = io::number_json(c.measured);
    switch (c.comparison) {
      case Comparison::AtMost:
        cj["comparison"] = "<=";
        cj["tolerance"] = io::number_json(c.tolerance);
        break;
      case Comparison::AtLeast:
        cj["comparison"] = ">=";
        cj["tolerance"] = io::number_json(c.tolerance);
        break;
      case Comparison::Recorded:
        cj["comparison"] = "recorded";
        cj["tolerance"] = nullptr;
        break;
    }
    cj["passed"] = c.passed;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace bilipkit::verify
