#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "bilipkit/registry.hpp"
#include "bilipkit/sampled_map.hpp"

namespace bilipkit {

inline constexpr std::size_t kAllPairsCap = 2000;
inline constexpr std::size_t kDefaultRandomPairs = 1'000'000;
inline constexpr double kCoincidenceEpsilon = 1e-12;

struct AllPairs {
  std::size_t cap = kAllPairsCap;
};

struct SeededRandom {
  std::size_t samples = kDefaultRandomPairs;
  std::uint64_t seed = 0;
};

using PairStrategy = std::variant<AllPairs, SeededRandom>;

/// AllPairs when the map has at most kAllPairsCap samples, SeededRandom otherwise.
PairStrategy default_strategy(std::size_t n, std::uint64_t seed = 0);
std::string describe(const PairStrategy& s);

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Empirical bi-Lipschitz constants of a sampled map. An infinite L_contract
/// means two distinct samples share an image.
struct DistortionReport {
  double L_expand = 0.0;
  double L_contract = 0.0;
  double bilip_constant = 0.0;
  IndexPair witness_expand{0, 0};
  IndexPair witness_contract{0, 0};
  std::size_t pairs_evaluated = 0;
  std::size_t pairs_skipped = 0;
  std::string strategy;
};

/// Extremal ratios |f(x) - f(x')| / |x - x'| and their reciprocals over the
/// pairs chosen by `strategy`. Pairs with
/// |x - x'| < kCoincidenceEpsilon (1 + max(|x|, |x'|)) are skipped and counted.
/// Ties on the extremal ratio go to the lexicographically smallest index pair.
/// Throws DegenerateMap if every pair is skipped.
DistortionReport estimate_bilip(const SampledMap& m, const PairStrategy& strategy = AllPairs{});

struct RadialReport {
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  std::size_t points = 0;
};

/// max / min of |f(x)| / |x| over the samples; pairs at the origin are skipped.
RadialReport radial_comparability(const SampledMap& m);

struct CubeBoundResult {
  DistortionReport inverted;
  RadialReport radial;
  double constant = 0.0;
  /// A^3.
  double bound = 0.0;
  /// inverted.bilip_constant <= A^3 + 1e-6.
  bool holds = false;
  /// Radial ratios of the inverted map lie in [1/A^3 - 1e-9, A^3 + 1e-9].
  bool radial_holds = false;
};

/// Samples `f`, conjugates the sample by the inversions and checks the
/// constant of the result against the cube of the constant of `f`.
CubeBoundResult verify_cube_bound(const AnalyticMap& f, const SamplerConfig& sampler,
                                  const PairStrategy& strategy = AllPairs{});

struct CompactifiedComparison {
  DistortionReport original;
  DistortionReport compactified;
};

/// Runs estimate_bilip on `m` and on compactify_map(m) with the same strategy.
CompactifiedComparison compare_compactified(const SampledMap& m,
                                            const PairStrategy& strategy = AllPairs{});

}  // namespace bilipkit
