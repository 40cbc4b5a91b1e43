#pragma once

/**
 * @file testkit.hpp
 * @brief Seeded generators and brute-force oracles for the property suites.
 *
 * Everything here is deterministic: the same GenConfig yields the same
 * sequence of values on every platform. The engine is std::mt19937_64
 * (fully specified by the standard); bounded draws use our own rejection
 * sampling because std::uniform_int_distribution is implementation-defined.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hyperfuzzy/dfuzzy.hpp"
#include "hyperfuzzy/hypnum.hpp"
#include "hyperfuzzy/universe.hpp"

namespace hyperfuzzy::testkit {

struct GenConfig {
  std::uint64_t seed = 42;
  std::size_t min_points = 3;  ///< per axis
  std::size_t max_points = 8;  ///< per axis
  std::size_t dim = 1;         ///< 1 or 2
  /// Membership components are drawn from k / grid_divisions, k = 0..grid_divisions.
  unsigned grid_divisions = 20;
  std::size_t trials = 100;
  /// When false, random grades are either 0 or strictly positive in both
  /// components (no grade with exactly one zero component).
  bool allow_zero_divisors = true;

  /// Per-trial configuration: seed + trial.
  GenConfig for_trial(std::size_t trial) const {
    GenConfig c = *this;
    c.seed = seed + trial;
    return c;
  }
};

struct ConvexShape {
  bool shared_peak = false;  ///< both components peak at the same point (M attained)
  bool strict = false;       ///< strictly unimodal, pairwise distinct values
};

class Generator {
 public:
  explicit Generator(const GenConfig& cfg);

  const GenConfig& config() const { return cfg_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, n).
  std::size_t below(std::size_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  /// Uniform real in [lo, hi).
  double real(double lo, double hi);

  double level();
  Hyp hyp();

  UniversePtr universe();
  DFuzzySet set(const UniversePtr& universe);
  DFuzzySet set() { return set(universe()); }

  /// Rise-then-fall sequence of grid levels with its maximum at `peak`.
  std::vector<double> unimodal_profile(std::size_t n, std::size_t peak, bool strict);

  /// Convex set on a 1-D or 2-D grid universe. 2-D sets are the componentwise
  /// min of two cylinder profiles. Throws std::logic_error if the result fails
  /// the convexity check (that would be a generator bug).
  DFuzzySet convex_set(const UniversePtr& universe, ConvexShape shape = {});
  DFuzzySet convex_set(ConvexShape shape = {}) { return convex_set(universe(), shape); }

 private:
  GenConfig cfg_;
  std::mt19937_64 engine_;
};

// ---- exhaustive enumeration ---------------------------------------------

/// Upper bound on the number of sets an exhaustive run may produce.
inline constexpr std::size_t kExhaustiveBudget = 2'000'000;

/// Every assignment of `values` to the points of Universe::line(points).
/// Returns the number of sets visited. Throws PreconditionError when the
/// count would exceed kExhaustiveBudget.
std::size_t enumerate_sets(std::size_t points, std::span<const Hyp> values,
                           const std::function<void(const DFuzzySet&)>& visit);

/// All level pairs (u, v) with u, v drawn from `levels`.
std::vector<Hyp> level_pairs(std::span<const double> levels);

/// enumerate_sets over level_pairs(levels) for every size 1..max_points.
/// Requires max_points <= 5 and at most 4 levels (PreconditionError).
std::size_t exhaustive_oracle(std::size_t max_points, std::span<const double> levels,
                              const std::function<void(const DFuzzySet&)>& visit);

// ---- independent oracles ------------------------------------------------

/// Classical quasi-concavity of real grades on a finite universe. 1-D
/// universes use a prefix/suffix maximum scan over coordinate order; other
/// universes check every collinear triple directly. Shares no code with the
/// convexity checks in convex.hpp.
bool scalar_quasi_concave(const Universe& universe, std::span<const double> grades);

/// True if some grade has exactly one zero idempotent component.
bool has_zero_divisor_grade(const DFuzzySet& a);

/// "[0.1e1+0.2e2, ...]" for counterexample reports.
std::string describe(const DFuzzySet& a);

}  // namespace hyperfuzzy::testkit
