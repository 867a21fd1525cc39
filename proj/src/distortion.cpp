#include "bilipkit/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bilipkit/errors.hpp"
#include "bilipkit/rng.hpp"

namespace bilipkit {

PairStrategy default_strategy(std::size_t n, std::uint64_t seed) {
  if (n <= kAllPairsCap) {
    return AllPairs{};
  }
  return SeededRandom{kDefaultRandomPairs, seed};
}

std::string describe(const PairStrategy& s) {
  if (std::holds_alternative<AllPairs>(s)) {
    return "all";
  }
  const auto& r = std::get<SeededRandom>(s);
  return "random(samples=" + std::to_string(r.samples) + ",seed=" + std::to_string(r.seed) + ")";
}

namespace {

// Row-major copy of a cloud, so the pair loop does not chase vectors.
struct FlatCloud {
  std::size_t dim = 0;
  std::vector<double> coords;
  std::vector<double> norms;

  explicit FlatCloud(const PointCloud& cloud) : dim(cloud.dim()) {
    coords.reserve(cloud.size() * dim);
    norms.reserve(cloud.size());
    for (const Point& p : cloud.points()) {
      coords.insert(coords.end(), p.coords().begin(), p.coords().end());
      norms.push_back(p.norm());
    }
  }

  double dist(std::size_t i, std::size_t j) const {
    const double* a = coords.data() + i * dim;
    const double* b = coords.data() + j * dim;
    double sum = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      const double d = a[k] - b[k];
      sum += d * d;
    }
    return std::sqrt(sum);
  }
};

struct Extremum {
  double value = -1.0;
  IndexPair witness{0, 0};

  void offer(double v, IndexPair pair) {
    if (v > value || (v == value && pair < witness)) {
      value = v;
      witness = pair;
    }
  }
};

class PairAccumulator {
 public:
  PairAccumulator(const SampledMap& m) : dom_(m.domain()), cod_(m.codomain()) {}

  void visit(std::size_t i, std::size_t j) {
    const double dx = dom_.dist(i, j);
    const double scale = 1.0 + std::max(dom_.norms[i], dom_.norms[j]);
    if (dx < kCoincidenceEpsilon * scale) {
      ++skipped_;
      return;
    }
    const double dy = cod_.dist(i, j);
    ++evaluated_;
    expand_.offer(dy / dx, {i, j});
    contract_.offer(dy > 0.0 ? dx / dy : std::numeric_limits<double>::infinity(), {i, j});
  }

  DistortionReport finish(std::string strategy) const {
    if (evaluated_ == 0) {
      throw DegenerateMap("every sampled pair is (near-)coincident in the domain");
    }
    DistortionReport r;
    r.L_expand = expand_.value;
    r.L_contract = contract_.value;
    r.bilip_constant = std::max(r.L_expand, r.L_contract);
    r.witness_expand = expand_.witness;
    r.witness_contract = contract_.witness;
    r.pairs_evaluated = evaluated_;
    r.pairs_skipped = skipped_;
    r.strategy = std::move(strategy);
    return r;
  }

 private:
  FlatCloud dom_;
  FlatCloud cod_;
  Extremum expand_;
  Extremum contract_;
  std::size_t evaluated_ = 0;
  std::size_t skipped_ = 0;
};

}  // namespace

DistortionReport estimate_bilip(const SampledMap& m, const PairStrategy& strategy) {
  const std::size_t n = m.size();
  PairAccumulator acc(m);
  if (const auto* all = std::get_if<AllPairs>(&strategy)) {
    if (n > all->cap) {
      throw DomainError("all-pairs strategy is capped at " + std::to_string(all->cap) +
                        " samples; got " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        acc.visit(i, j);
      }
    }
  } else {
    const auto& rnd = std::get<SeededRandom>(strategy);
    Rng rng(rnd.seed);
    for (std::size_t k = 0; k < rnd.samples; ++k) {
      const std::size_t i = rng.index(n);
      std::size_t j = rng.index(n - 1);
      if (j >= i) {
        ++j;
      }
      acc.visit(std::min(i, j), std::max(i, j));
    }
  }
  return acc.finish(describe(strategy));
}

RadialReport radial_comparability(const SampledMap& m) {
  RadialReport r;
  r.max_ratio = 0.0;
  r.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double rx = m.domain()[i].norm();
    const double ry = m.codomain()[i].norm();
    if (rx == 0.0 || ry == 0.0) {
      continue;
    }
    const double ratio = ry / rx;
    r.max_ratio = std::max(r.max_ratio, ratio);
    r.min_ratio = std::min(r.min_ratio, ratio);
    ++r.points;
  }
  if (r.points == 0) {
    throw DegenerateMap("no sample away from the origin");
  }
  return r;
}

CubeBoundResult verify_cube_bound(const AnalyticMap& f, const SamplerConfig& sampler,
                                  const PairStrategy& strategy) {
  if (!f.true_bilip_constant || !f.fixes_origin) {
    throw DomainError("cube bound needs a map with a known constant that fixes the origin");
  }
  const SampledMap inverted = invert_map(sample_analytic(f, sampler));
  CubeBoundResult out;
  out.constant = *f.true_bilip_constant;
  out.bound = out.constant * out.constant * out.constant;
  out.inverted = estimate_bilip(inverted, strategy);
  out.radial = radial_comparability(inverted);
  out.holds = out.inverted.bilip_constant <= out.bound + 1e-6;
  out.radial_holds = out.radial.min_ratio >= 1.0 / out.bound - 1e-9 &&
                     out.radial.max_ratio <= out.bound + 1e-9;
  return out;
}

CompactifiedComparison compare_compactified(const SampledMap& m, const PairStrategy& strategy) {
  return {estimate_bilip(m, strategy), estimate_bilip(compactify_map(m), strategy)};
}

}  // namespace bilipkit
