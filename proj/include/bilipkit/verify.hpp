#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bilipkit/io.hpp"

namespace bilipkit::verify {

enum class Comparison { AtMost, AtLeast, Recorded };

/// One measured quantity and the threshold it is held to.
struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::AtMost;
  bool passed = true;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool passed() const;
  /// First failing check, if any.
  const Check* first_failure() const;
  void add_at_most(std::string name, double measured, double tolerance);
  void add_at_least(std::string name, double measured, double tolerance);
  /// Baseline value, reported but never failing.
  void add_recorded(std::string name, double measured);
  void append(const SuiteResult& other);
};

struct Options {
  std::uint64_t seed = 0;
  /// Replaces the 1e-10 residual threshold of the identity and cone-exchange checks.
  std::optional<double> tolerance;
};

/// Distance identities under inversion, the finite-difference derivative norm,
/// the two-sided distance estimate, and the gluing of the pole chart with the
/// stereographic embedding.
SuiteResult identities(const Options& opt = {});
/// Cube bound on inverted registry maps, and the inversion iff on both sides.
SuiteResult cube_bound(const Options& opt = {});
/// Finite constants of compactified registry maps; divergence of the non-example.
SuiteResult compactify_iff(const Options& opt = {});
/// Exchange of asymptotic sets at 0 and infinity under inversion.
SuiteResult cone_exchange(const Options& opt = {});

inline constexpr std::string_view kSuiteNames[] = {"identities", "cube-bound", "compactify-iff",
                                                   "cone-exchange", "all"};

/// Dispatches on a suite name from kSuiteNames. Throws DomainError if unknown.
SuiteResult run(std::string_view suite, const Options& opt = {});

io::Json to_json(const SuiteResult& r);

}  // namespace bilipkit::verify
