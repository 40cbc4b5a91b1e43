#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hyperfuzzy/hypnum.hpp"
#include "hyperfuzzy/universe.hpp"

namespace hyperfuzzy {

/// Tolerance for comparing sets produced by floating-point arithmetic.
inline constexpr double kArithmeticTolerance = 1e-12;

/**
 * Fuzzy set whose membership grades are hyperbolic numbers in [0,1]_D,
 * i.e. both idempotent components lie in [0, 1].
 */
class DFuzzySet {
 public:
  /// Throws LengthMismatch, or RangeError naming the point index and the
  /// offending component.
  DFuzzySet(UniversePtr universe, std::vector<Hyp> values);

  static DFuzzySet constant(UniversePtr universe, const Hyp& value);
  static DFuzzySet empty(UniversePtr universe) { return constant(std::move(universe), Hyp::zero()); }
  /// 1 where the flag is set, 0 elsewhere.
  static DFuzzySet from_crisp(UniversePtr universe, const std::vector<bool>& members);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }

  std::size_t size() const { return values_.size(); }
  const Hyp& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Hyp> values() const { return values_; }

  bool is_empty() const;

 private:
  UniversePtr universe_;
  std::vector<Hyp> values_;
};

/// Classical fuzzy set with real grades in [0, 1].
class OrdinaryFuzzySet {
 public:
  OrdinaryFuzzySet(UniversePtr universe, std::vector<double> values);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

 private:
  UniversePtr universe_;
  std::vector<double> values_;
};

/// Split into the e1-component set and the e2-component set.
std::pair<OrdinaryFuzzySet, OrdinaryFuzzySet> decompose(const DFuzzySet& a);
DFuzzySet recompose(const OrdinaryFuzzySet& first, const OrdinaryFuzzySet& second);

/// Exact componentwise equality at every point. Throws UniverseMismatch.
bool equals(const DFuzzySet& a, const DFuzzySet& b);
bool approx_equals(const DFuzzySet& a, const DFuzzySet& b, double tol = kArithmeticTolerance);

/// Outcome of A ⊂ B under the partial order.
struct Inclusion {
  enum class Kind : std::uint8_t {
    Contained,       ///< f_A ⪯ f_B everywhere
    NotContained,    ///< comparable everywhere, reversed somewhere
    IncomparableAt,  ///< f_A(x) and f_B(x) incomparable at `index`
  };
  Kind kind = Kind::Contained;
  std::size_t index = 0;  ///< first offending point for the two failure kinds

  explicit operator bool() const { return kind == Kind::Contained; }
};

Inclusion is_subset(const DFuzzySet& a, const DFuzzySet& b);

DFuzzySet complement(const DFuzzySet& a);

/// Pointwise order_max / order_min. Strict mode reports the point index of
/// the first incomparable pair.
DFuzzySet unite(const DFuzzySet& a, const DFuzzySet& b, OrderMode mode = OrderMode::Lattice);
DFuzzySet intersect(const DFuzzySet& a, const DFuzzySet& b, OrderMode mode = OrderMode::Lattice);

/// Number of points where the memberships of a and b are incomparable,
/// i.e. where Lattice mode extends max/min beyond the strict definition.
std::size_t count_incomparable(const DFuzzySet& a, const DFuzzySet& b);

/// f_A + f_B, defined only where the sum stays ⪯ 1 (PreconditionError otherwise).
DFuzzySet algebraic_sum(const DFuzzySet& a, const DFuzzySet& b);
DFuzzySet algebraic_product(const DFuzzySet& a, const DFuzzySet& b);
DFuzzySet absolute_difference(const DFuzzySet& a, const DFuzzySet& b);

/// Set over X × Y (X outer) with grade order_min(f_A(x), f_B(y)).
DFuzzySet cartesian_product(const DFuzzySet& a, const DFuzzySet& b,
                            OrderMode mode = OrderMode::Lattice);
std::size_t count_incomparable_pairs(const DFuzzySet& a, const DFuzzySet& b);

/// (A, B; L) = L·A + L'·B, pointwise.
DFuzzySet convex_combination(const DFuzzySet& a, const DFuzzySet& b, const DFuzzySet& weight);

}  // namespace hyperfuzzy
