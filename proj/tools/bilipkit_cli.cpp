// Command-line front end: fixtures, transforms, distortion reports, cone
// directions and the built-in verification suites.
//
// Exit codes: 0 success, 1 failed assertion, 2 parse/usage error,
// 3 hypothesis violation, 4 degenerate data.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "bilipkit/cones.hpp"
#include "bilipkit/distortion.hpp"
#include "bilipkit/errors.hpp"
#include "bilipkit/fixtures.hpp"
#include "bilipkit/io.hpp"
#include "bilipkit/registry.hpp"
#include "bilipkit/sampled_map.hpp"
#include "bilipkit/transforms.hpp"
#include "bilipkit/verify.hpp"

namespace fs = std::filesystem;
using namespace bilipkit;

namespace {

enum Exit : int {
  kOk = 0,
  kAssertionFailed = 1,
  kUsage = 2,
  kHypothesis = 3,
  kDegenerate = 4,
};

struct Common {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
};

void emit_text(const std::string& output, const std::string& text) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    throw ParseError("cannot open '" + output + "' for writing");
  }
  out << text;
}

bool is_map_file(const fs::path& p) { return fs::exists(io::sidecar_path(p)); }

void require_output(const std::string& output, const char* what) {
  if (output.empty()) {
    throw DomainError(std::string(what) + " needs --output PATH (a sidecar is written next to it)");
  }
}

std::pair<double, double> parse_shell(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("--shell expects R_MIN:R_MAX, got '" + text + "'");
  }
  const std::string lo = text.substr(0, colon);
  const std::string hi = text.substr(colon + 1);
  const double r = io::parse_double(lo);
  const double big_r = (hi == "inf" || hi == "Inf") ? std::numeric_limits<double>::infinity()
                                                    : io::parse_double(hi);
  return {r, big_r};
}

// ---- generate ---------------------------------------------------------------

struct GenerateArgs {
  Common common;
  std::string fixture;
  std::size_t dim = 2;
  std::size_t n = 100;
  std::optional<double> r_min;
  std::optional<double> r_max;
  double lambda = 2.0;
  double t = 1.25;
  double t_max = 1e3;
  double offset = 1.0;
  bool origin = false;
  bool unbounded = false;
  std::size_t probes = 0;
};

std::optional<AnalyticMap> map_fixture(const GenerateArgs& a) {
  if (a.fixture == "identity") return identity_map(a.dim);
  if (a.fixture == "scaling") return scaling_map(a.lambda, a.dim);
  if (a.fixture == "linear-diag-1-3") return diagonal_map_1_3();
  if (a.fixture == "linear-rotated-2") return rotated_stretch_map();
  if (a.fixture == "shear") return shear_map();
  if (a.fixture == "radial") return radial_power_map(a.t, a.dim);
  if (a.fixture == "norm-times-x") return norm_times_x_map(a.dim);
  return std::nullopt;
}

int run_generate(const GenerateArgs& a) {
  if (auto f = map_fixture(a)) {
    require_output(a.common.output, "generating a map");
    SamplerConfig cfg;
    cfg.count = a.n;
    cfg.dim = f->dim_in;
    cfg.seed = a.common.seed;
    cfg.r_min = a.r_min.value_or(f->globally_defined() ? 1e-2 : std::max(f->domain_r_min, 1e-2));
    cfg.r_max = a.r_max.value_or(std::isinf(f->domain_r_max) ? 1e2 : f->domain_r_max);
    cfg.include_origin = a.origin;
    cfg.unbounded_domain = a.unbounded;
    cfg.probes_per_direction = a.probes;
    io::write_map_files(a.common.output, sample_analytic(*f, cfg));
    return kOk;
  }
  PointCloud cloud = PointCloud::empty(1);
  if (a.fixture == "ray") {
    cloud = fixtures::ray_cloud(a.dim, a.n, a.r_min.value_or(1e-3), a.r_max.value_or(1.0),
                                a.common.seed);
  } else if (a.fixture == "shifted-line") {
    cloud = fixtures::shifted_line_cloud(a.n, a.r_min.value_or(1.0), a.t_max, a.offset);
  } else if (a.fixture == "spiral") {
    cloud = fixtures::spiral_cloud(a.n, a.r_min.value_or(1e-3), a.r_max.value_or(1e3));
  } else if (a.fixture == "random") {
    cloud = fixtures::random_cloud(a.dim, a.n, a.r_min.value_or(1e-3), a.r_max.value_or(1e3),
                                   a.common.seed);
  } else if (a.fixture == "sphere") {
    cloud = fixtures::sphere_cloud(a.dim, a.n, a.common.seed);
  } else {
    std::cerr << "error: unknown fixture '" << a.fixture << "'\n";
    return kUsage;
  }
  std::ostringstream os;
  io::write_cloud_csv(os, cloud);
  emit_text(a.common.output, os.str());
  return kOk;
}

// ---- invert / compactify / beta ----------------------------------------------

int run_invert(const Common& c) {
  if (is_map_file(c.input)) {
    require_output(c.output, "inverting a map");
    io::write_map_files(c.output, invert_map(io::read_map_files(c.input)));
    return kOk;
  }
  const PointCloud cloud = io::read_cloud_file(c.input);
  const PointCloud inverted = invert_cloud(cloud);
  if (inverted.size() != cloud.size()) {
    std::cerr << "warning: dropped " << cloud.size() - inverted.size()
              << " point(s) at the origin, where inversion is undefined\n";
  }
  std::ostringstream os;
  io::write_cloud_csv(os, inverted);
  emit_text(c.output, os.str());
  return kOk;
}

int run_compactify(const Common& c) {
  if (is_map_file(c.input)) {
    require_output(c.output, "compactifying a map");
    io::write_map_files(c.output, compactify_map(io::read_map_files(c.input)));
    return kOk;
  }
  const PointCloud cloud = io::read_cloud_file(c.input);
  std::vector<Point> out;
  out.reserve(cloud.size());
  for (const Point& p : cloud.points()) {
    out.push_back(stereo_embed(p).ambient());
  }
  std::ostringstream os;
  if (out.empty()) {
    io::write_cloud_csv(os, PointCloud::empty(cloud.dim() + 1));
  } else {
    io::write_cloud_csv(os, PointCloud(std::move(out)));
  }
  emit_text(c.output, os.str());
  return kOk;
}

int run_beta(const Common& c, bool renormalize) {
  const PointCloud cloud = io::read_cloud_file(c.input);
  if (cloud.empty()) {
    throw InsufficientPoints("beta: input cloud is empty");
  }
  std::vector<Point> out;
  out.reserve(cloud.size());
  const BetaVariant v = renormalize ? BetaVariant::Renormalized : BetaVariant::Verbatim;
  for (const Point& p : cloud.points()) {
    out.push_back(beta(p, v));
  }
  std::ostringstream os;
  io::write_cloud_csv(os, PointCloud(std::move(out)));
  emit_text(c.output, os.str());
  return kOk;
}

// ---- distortion -----------------------------------------------------------------

struct DistortionArgs {
  Common common;
  std::string strategy = "auto";
  std::size_t pairs = kDefaultRandomPairs;
  std::string shell;
};

int run_distortion(const DistortionArgs& a) {
  SampledMap m = io::read_map_files(a.common.input);
  std::optional<io::ShellRange> shell;
  if (!a.shell.empty()) {
    const auto [r, big_r] = parse_shell(a.shell);
    m = restrict_map(m, r, big_r);
    shell = io::ShellRange{r, big_r};
  }
  PairStrategy strategy = default_strategy(m.size(), a.common.seed);
  if (a.strategy == "all") {
    strategy = AllPairs{};
  } else if (a.strategy == "random") {
    strategy = SeededRandom{a.pairs, a.common.seed};
  } else if (std::holds_alternative<SeededRandom>(strategy)) {
    strategy = SeededRandom{a.pairs, a.common.seed};
  }
  emit_text(a.common.output, io::dump(io::report_json(estimate_bilip(m, strategy), shell)));
  return kOk;
}

// ---- cones --------------------------------------------------------------------

struct ConesArgs {
  Common common;
  std::string kind = "infinity";
  double fraction = 0.1;
  std::size_t min_count = 8;
  std::optional<double> band;
  double center = 1.0;
  std::string compare;
  bool exchange = false;
  std::optional<double> tolerance;
};

int run_cones(const ConesArgs& a) {
  const PointCloud cloud = io::read_cloud_file(a.common.input);
  const ConeKind kind = a.kind == "origin" ? ConeKind::AtOrigin : ConeKind::AtInfinity;
  const ShellConfig shell = a.band ? ShellConfig::log_band(a.center, *a.band)
                                   : ShellConfig::fractional(a.fraction, a.min_count);
  if (a.exchange) {
    const ConeExchangeResidual r = verify_cone_exchange(cloud, shell);
    const double tol = a.tolerance.value_or(1e-10);
    io::Json j;
    j["schema"] = 1;
    j["inf_to_origin"] = r.inf_to_origin ? io::number_json(*r.inf_to_origin) : io::Json(nullptr);
    j["origin_to_inf"] = r.origin_to_inf ? io::number_json(*r.origin_to_inf) : io::Json(nullptr);
    j["tolerance"] = tol;
    const bool ok = r.inf_to_origin.value_or(0.0) <= tol && r.origin_to_inf.value_or(0.0) <= tol;
    j["passed"] = ok;
    emit_text(a.common.output, io::dump(j));
    return ok ? kOk : kAssertionFailed;
  }
  if (!a.compare.empty()) {
    const PointCloud other = io::read_cloud_file(a.compare);
    io::Json j;
    j["schema"] = 1;
    j["kind"] = std::string(to_string(kind));
    j["angular_hausdorff"] = io::number_json(compare_cones(cloud, other, kind, shell));
    emit_text(a.common.output, io::dump(j));
    return kOk;
  }
  std::ostringstream os;
  io::write_directions_csv(os, asymptotic_directions(cloud, kind, shell));
  emit_text(a.common.output, os.str());
  return kOk;
}

// ---- verify -------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string suite;
  std::optional<double> tolerance;
};

int run_verify(const VerifyArgs& a) {
  verify::Options opt;
  opt.seed = a.common.seed;
  opt.tolerance = a.tolerance;
  const verify::SuiteResult r = verify::run(a.suite, opt);
  emit_text(a.common.output, io::dump(verify::to_json(r)));
  if (const verify::Check* bad = r.first_failure()) {
    std::cerr << "verify " << a.suite << ": FAILED '" << bad->name << "' (measured "
              << io::format_double(bad->measured) << ", threshold " << io::format_double(bad->tolerance)
              << ")\n";
    return kAssertionFailed;
  }
  return kOk;
}

void add_common(CLI::App* sub, Common& c, bool with_input) {
  if (with_input) {
    sub->add_option("input", c.input, "Input CSV (map CSV when a .meta.json sidecar exists)")
        ->required()
        ->check(CLI::ExistingFile);
  }
  sub->add_option("-o,--output", c.output, "Output path (stdout when omitted, for text outputs)");
  sub->add_option("--seed", c.seed, "Seed for every randomized step");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bilipkit: inversion, stereographic compactification and bi-Lipschitz distortion"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a fixture cloud or sampled map");
  generate->add_option("fixture", gen.fixture,
                       "identity|scaling|linear-diag-1-3|linear-rotated-2|shear|radial|norm-times-x|"
                       "ray|shifted-line|spiral|random|sphere")
      ->required();
  add_common(generate, gen.common, false);
  generate->add_option("--dim", gen.dim, "Ambient dimension")->check(CLI::PositiveNumber);
  generate->add_option("--n", gen.n, "Number of samples")->check(CLI::PositiveNumber);
  generate->add_option("--rmin", gen.r_min, "Smallest sample radius");
  generate->add_option("--rmax", gen.r_max, "Largest sample radius");
  generate->add_option("--lambda", gen.lambda, "Scaling factor");
  generate->add_option("--t", gen.t, "Exponent of the radial power map");
  generate->add_option("--tmax", gen.t_max, "Largest abscissa of the shifted line");
  generate->add_option("--offset", gen.offset, "Ordinate of the shifted line");
  generate->add_flag("--origin", gen.origin, "Include the origin pair (maps fixing 0)");
  generate->add_flag("--unbounded", gen.unbounded, "Flag the sampled domain as unbounded");
  generate->add_option("--probes", gen.probes, "Points per singular direction (linear maps)");

  Common inv;
  auto* invert_cmd = app.add_subcommand("invert", "Invert a cloud or conjugate a map by inversions");
  add_common(invert_cmd, inv, true);

  Common comp;
  auto* compactify_cmd = app.add_subcommand("compactify", "Stereographic compactification");
  add_common(compactify_cmd, comp, true);

  Common beta_args;
  bool renormalize = false;
  auto* beta_cmd = app.add_subcommand("beta", "Evaluate the pole chart on a cloud of |y| <= 1/2");
  add_common(beta_cmd, beta_args, true);
  beta_cmd->add_flag("--renormalize-beta", renormalize,
                     "Use the chart that lands on the sphere instead of the verbatim formula");

  DistortionArgs dist;
  auto* distortion = app.add_subcommand("distortion", "Empirical bi-Lipschitz constants of a map");
  add_common(distortion, dist.common, true);
  distortion->add_option("--strategy", dist.strategy, "all|random|auto")
      ->check(CLI::IsMember({"all", "random", "auto"}));
  distortion->add_option("--pairs", dist.pairs, "Random pairs for --strategy random")
      ->check(CLI::PositiveNumber);
  distortion->add_option("--shell", dist.shell, "Restrict to R_MIN <= |x| < R_MAX (R_MAX may be inf)");

  ConesArgs cones;
  auto* cones_cmd = app.add_subcommand("cones", "Asymptotic directions at 0 or infinity");
  add_common(cones_cmd, cones.common, true);
  cones_cmd->add_option("--kind", cones.kind, "origin|infinity")
      ->check(CLI::IsMember({"origin", "infinity"}));
  cones_cmd->add_option("--fraction", cones.fraction, "Shell fraction (fraction mode)");
  cones_cmd->add_option("--min-count", cones.min_count, "Minimum shell size (fraction mode)");
  cones_cmd->add_option("--band", cones.band, "Log-band half-width; switches to log-band shells");
  cones_cmd->add_option("--center", cones.center, "Log-band centre radius");
  cones_cmd->add_option("--compare", cones.compare, "Second cloud: report the angular Hausdorff distance")
      ->check(CLI::ExistingFile);
  cones_cmd->add_flag("--exchange", cones.exchange, "Check S^inf(X) = S^0(inv X) and S^0(X) = S^inf(inv X)");
  cones_cmd->add_option("--tolerance", cones.tolerance, "Residual threshold for --exchange");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run a built-in verification suite");
  verify_cmd->add_option("suite", ver.suite, "identities|cube-bound|compactify-iff|cone-exchange|all")
      ->required()
      ->check(CLI::IsMember({"identities", "cube-bound", "compactify-iff", "cone-exchange", "all"}));
  add_common(verify_cmd, ver.common, false);
  verify_cmd->add_option("--tolerance", ver.tolerance, "Override the 1e-10 residual threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*invert_cmd) return run_invert(inv);
    if (*compactify_cmd) return run_compactify(comp);
    if (*beta_cmd) return run_beta(beta_args, renormalize);
    if (*distortion) return run_distortion(dist);
    if (*cones_cmd) return run_cones(cones);
    if (*verify_cmd) return run_verify(ver);
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << '\n';
    return kHypothesis;
  } catch (const DegenerateMap& e) {
    std::cerr << "degenerate data: " << e.what() << '\n';
    return kDegenerate;
  } catch (const InsufficientPoints& e) {
    std::cerr << "degenerate data: " << e.what() << '\n';
    return kDegenerate;
  } catch (const EmptyRestriction& e) {
    std::cerr << "degenerate data: " << e.what() << '\n';
    return kDegenerate;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
