#pragma once

/**
 * @file convex.hpp
 * @brief Cuts, convexity, cores, shadows and separation on finite universes.
 *
 * A finite point set is treated as convex when it contains every universe
 * point lying on an open segment between two of its members ("grid
 * convexity"). Combination weights along a segment are real.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hyperfuzzy/dfuzzy.hpp"
#include "hyperfuzzy/hypnum.hpp"
#include "hyperfuzzy/universe.hpp"

namespace hyperfuzzy {

/// Axis-aligned hyperplane {x : x[axis] = threshold}.
struct Hyperplane {
  std::size_t axis = 0;
  double threshold = 0.0;

  /// -1 below, +1 above, 0 on the hyperplane.
  int side(std::span<const double> point) const {
    const double c = point[axis];
    return c < threshold ? -1 : (c > threshold ? 1 : 0);
  }

  bool operator==(const Hyperplane&) const = default;
};

/// Violating triple: `between` lies on the segment first→second at `lambda`.
struct ConvexityWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t between = 0;
  double lambda = 0.0;
  std::optional<Hyp> alpha;  ///< cut level, for cut-based checks
};

struct ConvexityReport {
  bool convex = true;
  std::optional<ConvexityWitness> witness;
  std::vector<Hyp> alphas_tested;
  /// Endpoint pairs whose grades were incomparable, so the Lattice meet was
  /// used where the strict minimum is undefined.
  std::size_t incomparable_pairs = 0;
};

struct SeparationReport {
  Hyp best_degree;                 ///< per-component optimum
  Hyperplane best_hyperplane_u;    ///< attains best_degree.u()
  Hyperplane best_hyperplane_v;    ///< attains best_degree.v()
  Hyp joint_best_degree;           ///< best single hyperplane
  Hyperplane joint_hyperplane;
  Hyp intersection_max;            ///< sup of A ∩ B (Lattice)
};

struct Supremum {
  Hyp value;
  bool attained = false;
};

struct RadiusEntry {
  Hyp alpha;
  Hyp radius;
};

struct ShadowComparison {
  enum class Verdict : std::uint8_t { Equal, Differs, Inconclusive };
  Verdict verdict = Verdict::Equal;
  std::optional<std::size_t> axis;
};

// ---- cuts ----------------------------------------------------------------

/// Indices x with f_A(x) ⪰ alpha. alpha must lie in (0,1]_D (RangeError).
std::vector<std::size_t> alpha_cut(const DFuzzySet& a, const Hyp& alpha);

/// Every (u, v) built from attained positive component values, sorted.
/// Cuts only change at these levels, so checking them covers all of (0,1]_D.
std::vector<Hyp> candidate_alphas(const DFuzzySet& a);

std::vector<SegmentPoint> segment_points(const Universe& universe, std::size_t i, std::size_t j);

/// Grid convexity of a point set; returns the first violation if any.
std::optional<ConvexityWitness> find_convexity_violation(const Universe& universe,
                                                         std::span<const std::size_t> members);
inline bool is_grid_convex(const Universe& universe, std::span<const std::size_t> members) {
  return !find_convexity_violation(universe, members).has_value();
}

// ---- convexity -----------------------------------------------------------

/// Every cut at a candidate level is grid convex.
ConvexityReport convex_by_cuts(const DFuzzySet& a);

/// f(between) ⪰ min(f(first), f(second)) along every segment.
ConvexityReport convex_pointwise(const DFuzzySet& a, OrderMode mode = OrderMode::Lattice);

/// As convex_pointwise, with ≻ (strict in both components).
ConvexityReport strongly_convex(const DFuzzySet& a);

/// R(alpha) = largest point norm inside each candidate cut (0 when empty).
std::vector<RadiusEntry> bounding_radius(const DFuzzySet& a);

// ---- supremum and core ---------------------------------------------------

Supremum essential_supremum(const DFuzzySet& a);

/// {x : f_A(x) ⪰ M - epsilon}; epsilon must be ≻ 0. May be empty when M is
/// not attained at a single point.
std::vector<std::size_t> q_set(const DFuzzySet& a, const Hyp& epsilon);

/// Points where f_A equals M exactly.
std::vector<std::size_t> core(const DFuzzySet& a);

// ---- shadows -------------------------------------------------------------

/// Projection dropping `axis`; each projected point takes the componentwise
/// sup over its fiber. Points keep first-occurrence order.
DFuzzySet shadow(const DFuzzySet& a, std::size_t axis);

/// Looks for an axis whose shadows of a and b differ.
ShadowComparison shadow_witness(const DFuzzySet& a, const DFuzzySet& b,
                                std::span<const std::size_t> axes);

// ---- separation ----------------------------------------------------------

/// 1 - min over both orientations of max(sup f_A on one side, sup f_B on the
/// other). Points on the hyperplane count on both sides.
Hyp separation_degree(const DFuzzySet& a, const DFuzzySet& b, const Hyperplane& h);

/// Per axis: midpoints between consecutive distinct coordinates plus one
/// sentinel beyond each end.
std::vector<Hyperplane> candidate_hyperplanes(const Universe& universe);

SeparationReport optimal_separation(const DFuzzySet& a, const DFuzzySet& b);

std::string_view to_string(ShadowComparison::Verdict verdict);

}  // namespace hyperfuzzy
