#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "bilipkit/cones.hpp"
#include "bilipkit/distortion.hpp"
#include "bilipkit/errors.hpp"
#include "bilipkit/io.hpp"
#include "bilipkit/registry.hpp"
#include "bilipkit/sampled_map.hpp"
#include "bilipkit/transforms.hpp"
#include "bilipkit/verify.hpp"

namespace py = pybind11;
using namespace bilipkit;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

PointCloud cloud_from(const Array& a) {
  if (a.ndim() != 2) {
    throw DomainError("expected a 2-D array of shape (n, q)");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  const auto q = static_cast<std::size_t>(a.shape(1));
  if (n == 0) {
    return PointCloud::empty(q);
  }
  auto r = a.unchecked<2>();
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> c(q);
    for (std::size_t j = 0; j < q; ++j) {
      c[j] = r(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j));
    }
    pts.emplace_back(std::move(c));
  }
  return PointCloud(std::move(pts));
}

Array array_from(const PointCloud& cloud) {
  Array out({static_cast<py::ssize_t>(cloud.size()), static_cast<py::ssize_t>(cloud.dim())});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t j = 0; j < cloud.dim(); ++j) {
      w(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = cloud[i][j];
    }
  }
  return out;
}

Array array_from(const std::vector<Point>& pts, std::size_t dim) {
  Array out({static_cast<py::ssize_t>(pts.size()), static_cast<py::ssize_t>(dim)});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      w(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = pts[i][j];
    }
  }
  return out;
}

std::vector<double> coords(const Point& p) { return {p.coords().begin(), p.coords().end()}; }

BetaVariant beta_variant(const std::string& name) {
  if (name == "verbatim") return BetaVariant::Verbatim;
  if (name == "projected") return BetaVariant::Projected;
  if (name == "renormalized") return BetaVariant::Renormalized;
  throw DomainError("beta variant must be verbatim, projected or renormalized");
}

PairStrategy strategy_from(const std::string& name, std::size_t samples, std::uint64_t seed) {
  if (name == "all") return AllPairs{};
  if (name == "random") return SeededRandom{samples, seed};
  throw DomainError("strategy must be 'all' or 'random'");
}

ShellConfig shell_from(double fraction, std::size_t min_count, std::optional<double> band,
                       double center) {
  return band ? ShellConfig::log_band(center, *band) : ShellConfig::fractional(fraction, min_count);
}

ConeKind kind_from(const std::string& name) {
  if (name == "origin") return ConeKind::AtOrigin;
  if (name == "infinity") return ConeKind::AtInfinity;
  throw DomainError("kind must be 'origin' or 'infinity'");
}

py::dict report_dict(const DistortionReport& r) {
  py::dict d;
  d["L_expand"] = r.L_expand;
  d["L_contract"] = r.L_contract;
  d["bilip_constant"] = r.bilip_constant;
  d["witness_expand"] = py::make_tuple(r.witness_expand.first, r.witness_expand.second);
  d["witness_contract"] = py::make_tuple(r.witness_contract.first, r.witness_contract.second);
  d["pairs_evaluated"] = r.pairs_evaluated;
  d["pairs_skipped"] = r.pairs_skipped;
  d["strategy"] = r.strategy;
  return d;
}

}  // namespace

PYBIND11_MODULE(_bilipkit, m) {
  m.doc() = "Inversion, stereographic compactification and bi-Lipschitz distortion estimates.";

  static py::exception<Error> base(m, "BilipkitError", PyExc_ValueError);
  py::register_exception<OriginError>(m, "OriginError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
  py::register_exception<EmptyRestriction>(m, "EmptyRestriction", base.ptr());
  py::register_exception<DegenerateMap>(m, "DegenerateMap", base.ptr());
  py::register_exception<InsufficientPoints>(m, "InsufficientPoints", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  // transforms
  m.def("invert", [](std::vector<double> x) { return coords(invert(Point(std::move(x)))); },
        py::arg("x"));
  m.def("stereo_embed",
        [](std::vector<double> x) { return coords(stereo_embed(Point(std::move(x))).ambient()); },
        py::arg("x"));
  m.def("stereo_project",
        [](std::vector<double> p) { return coords(stereo_project(SpherePoint(Point(std::move(p))))); },
        py::arg("p"));
  m.def("beta",
        [](std::vector<double> y, const std::string& variant) {
          return coords(beta(Point(std::move(y)), beta_variant(variant)));
        },
        py::arg("y"), py::arg("variant") = "verbatim");
  m.def("sphere_defect", [](std::vector<double> p) { return sphere_defect(Point(std::move(p))); });
  m.def("claim_lip1_bounds", [](std::vector<double> x, std::vector<double> xp) {
    const ClaimBounds b = claim_lip1_bounds(Point(std::move(x)), Point(std::move(xp)));
    py::dict d;
    d["lower"] = b.lower;
    d["upper"] = b.upper;
    d["distance"] = b.distance;
    d["C"] = b.c;
    d["holds"] = b.holds;
    return d;
  });
  m.def("e_E_residual", [](std::vector<double> a, std::vector<double> b) {
    return e_E_residual(Point(std::move(a)), Point(std::move(b)));
  });
  m.def("law_of_cosines_residual", [](std::vector<double> a, std::vector<double> b) {
    return law_of_cosines_residual(Point(std::move(a)), Point(std::move(b)));
  });
  m.def("inversion_derivative_norm",
        [](std::vector<double> x, double h) { return inversion_derivative_norm(Point(std::move(x)), h); },
        py::arg("x"), py::arg("h"));

  // sampled maps
  py::class_<SampledMap>(m, "SampledMap")
      .def(py::init([](const Array& domain, const Array& codomain, bool fixes_origin,
                       bool avoids_origin, bool unbounded_domain, const std::string& ambient) {
             MapFlags flags;
             flags.fixes_origin = fixes_origin;
             flags.avoids_origin = avoids_origin;
             flags.unbounded_domain = unbounded_domain;
             flags.ambient = ambient_from_string(ambient);
             return SampledMap(cloud_from(domain), cloud_from(codomain), flags);
           }),
           py::arg("domain"), py::arg("codomain"), py::arg("fixes_origin") = false,
           py::arg("avoids_origin") = true, py::arg("unbounded_domain") = false,
           py::arg("ambient") = "Affine")
      .def_property_readonly("domain", [](const SampledMap& s) { return array_from(s.domain()); })
      .def_property_readonly("codomain", [](const SampledMap& s) { return array_from(s.codomain()); })
      .def_property_readonly("fixes_origin", [](const SampledMap& s) { return s.flags().fixes_origin; })
      .def_property_readonly("avoids_origin", [](const SampledMap& s) { return s.flags().avoids_origin; })
      .def_property_readonly("unbounded_domain",
                             [](const SampledMap& s) { return s.flags().unbounded_domain; })
      .def_property_readonly("ambient",
                             [](const SampledMap& s) { return std::string(to_string(s.flags().ambient)); })
      .def("__len__", &SampledMap::size);

  m.def("invert_map", &invert_map, py::arg("m"));
  m.def("compactify_map", &compactify_map, py::arg("m"));
  m.def("restrict_map", &restrict_map, py::arg("m"), py::arg("r"),
        py::arg("R") = std::numeric_limits<double>::infinity());

  m.def("registry_names", [] {
    std::vector<std::string> names;
    for (const auto& f : standard_registry()) {
      names.push_back(f.name);
    }
    return names;
  });
  m.def("registry_constant", [](const std::string& name) {
    return find_registry_map(name).true_bilip_constant;
  });
  m.def("sample_registry_map",
        [](const std::string& name, std::size_t count, double r_min, double r_max,
           std::uint64_t seed, bool include_origin, bool unbounded, std::size_t probes) {
          const AnalyticMap f = find_registry_map(name);
          SamplerConfig cfg;
          cfg.count = count;
          cfg.dim = f.dim_in;
          cfg.r_min = r_min;
          cfg.r_max = r_max;
          cfg.seed = seed;
          cfg.include_origin = include_origin;
          cfg.unbounded_domain = unbounded;
          cfg.probes_per_direction = probes;
          return sample_analytic(f, cfg);
        },
        py::arg("name"), py::arg("count") = 100, py::arg("r_min") = 1e-2, py::arg("r_max") = 1e2,
        py::arg("seed") = 0, py::arg("include_origin") = false, py::arg("unbounded") = false,
        py::arg("probes") = 0);

  // distortion
  m.def("estimate_bilip",
        [](const SampledMap& s, const std::string& strategy, std::size_t samples, std::uint64_t seed) {
          return report_dict(estimate_bilip(s, strategy_from(strategy, samples, seed)));
        },
        py::arg("m"), py::arg("strategy") = "all", py::arg("samples") = kDefaultRandomPairs,
        py::arg("seed") = 0);
  m.def("radial_comparability", [](const SampledMap& s) {
    const RadialReport r = radial_comparability(s);
    return py::make_tuple(r.min_ratio, r.max_ratio, r.points);
  });

  // cones
  m.def("asymptotic_directions",
        [](const Array& points, const std::string& kind, double fraction, std::size_t min_count,
           std::optional<double> band, double center) {
          const DirectionSet d = asymptotic_directions(cloud_from(points), kind_from(kind),
                                                       shell_from(fraction, min_count, band, center));
          return array_from(d.directions, d.dim());
        },
        py::arg("points"), py::arg("kind") = "infinity", py::arg("fraction") = 0.1,
        py::arg("min_count") = 8, py::arg("band") = py::none(), py::arg("center") = 1.0);
  m.def("angular_hausdorff", [](const Array& a, const Array& b) {
    DirectionSet da;
    DirectionSet db;
    da.directions = cloud_from(a).points();
    db.directions = cloud_from(b).points();
    return angular_hausdorff(da, db);
  });
  m.def("verify_cone_exchange",
        [](const Array& points, double fraction, std::size_t min_count, std::optional<double> band,
           double center) {
          const ConeExchangeResidual r =
              verify_cone_exchange(cloud_from(points), shell_from(fraction, min_count, band, center));
          return py::make_tuple(r.inf_to_origin, r.origin_to_inf);
        },
        py::arg("points"), py::arg("fraction") = 0.1, py::arg("min_count") = 8,
        py::arg("band") = py::none(), py::arg("center") = 1.0);

  m.def("verify_json",
        [](const std::string& suite, std::uint64_t seed) {
          verify::Options opt;
          opt.seed = seed;
          return io::dump(verify::to_json(verify::run(suite, opt)));
        },
        py::arg("suite"), py::arg("seed") = 0);
}
