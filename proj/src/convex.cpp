#include "hyperfuzzy/convex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "hyperfuzzy/error.hpp"

namespace hyperfuzzy {

namespace {

std::optional<ConvexityWitness> violation_in_mask(const Universe& universe,
                                                  const std::vector<char>& in_set) {
  const std::size_t n = universe.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_set[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!in_set[j]) continue;
      for (const SegmentPoint& s : universe.ordered_segment(i, j)) {
        if (!in_set[s.index]) return ConvexityWitness{i, j, s.index, s.lambda, std::nullopt};
      }
    }
  }
  return std::nullopt;
}

std::vector<char> cut_mask(const DFuzzySet& a, const Hyp& alpha) {
  std::vector<char> mask(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mask[i] = leq(alpha, a[i]) ? 1 : 0;
  return mask;
}

void require_unit_alpha(const Hyp& alpha) {
  if (!(alpha.u() > 0.0 && alpha.u() <= 1.0 && alpha.v() > 0.0 && alpha.v() <= 1.0)) {
    throw RangeError("cut level " + to_string(alpha) + " outside (0,1]");
  }
}

std::vector<double> sorted_positive(const DFuzzySet& a, bool first) {
  std::vector<double> out;
  for (const Hyp& x : a.values()) {
    const double c = first ? x.u() : x.v();
    if (c > 0.0) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct SideSup {
  Hyp below;  // side <= 0
  Hyp above;  // side >= 0
};

SideSup side_sups(const DFuzzySet& a, const Hyperplane& h) {
  SideSup s;
  const Universe& u = a.universe();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int side = h.side(u.point(i));
    if (side <= 0) s.below = order_max(s.below, a[i]);
    if (side >= 0) s.above = order_max(s.above, a[i]);
  }
  return s;
}

}  // namespace

std::vector<std::size_t> alpha_cut(const DFuzzySet& a, const Hyp& alpha) {
  require_unit_alpha(alpha);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (leq(alpha, a[i])) out.push_back(i);
  }
  return out;
}

std::vector<Hyp> candidate_alphas(const DFuzzySet& a) {
  const auto us = sorted_positive(a, true);
  const auto vs = sorted_positive(a, false);
  std::vector<Hyp> out;
  out.reserve(us.size() * vs.size());
  for (double u : us) {
    for (double v : vs) out.emplace_back(u, v);
  }
  return out;
}

std::vector<SegmentPoint> segment_points(const Universe& universe, std::size_t i, std::size_t j) {
  return universe.segment(i, j);
}

std::optional<ConvexityWitness> find_convexity_violation(const Universe& universe,
                                                         std::span<const std::size_t> members) {
  std::vector<char> mask(universe.size(), 0);
  for (std::size_t m : members) mask.at(m) = 1;
  return violation_in_mask(universe, mask);
}

ConvexityReport convex_by_cuts(const DFuzzySet& a) {
  ConvexityReport report;
  for (const Hyp& alpha : candidate_alphas(a)) {
    report.alphas_tested.push_back(alpha);
    if (auto w = violation_in_mask(a.universe(), cut_mask(a, alpha))) {
      w->alpha = alpha;
      report.convex = false;
      report.witness = w;
      return report;
    }
  }
  return report;
}

namespace {

template <class Dominates>
ConvexityReport segment_sweep(const DFuzzySet& a, OrderMode mode, Dominates&& dominates) {
  ConvexityReport report;
  const Universe& universe = a.universe();
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto seg = universe.ordered_segment(i, j);
      if (seg.empty()) continue;
      if (!comparable(a[i], a[j])) ++report.incomparable_pairs;
      Hyp floor;
      try {
        floor = order_min(a[i], a[j], mode);
      } catch (const IncomparableError& e) {
        throw IncomparableError(std::string(e.what()) + " at points " + std::to_string(i) +
                                " and " + std::to_string(j));
      }
      for (const SegmentPoint& s : seg) {
        if (!dominates(a[s.index], floor)) {
          report.convex = false;
          report.witness = ConvexityWitness{i, j, s.index, s.lambda, std::nullopt};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace

ConvexityReport convex_pointwise(const DFuzzySet& a, OrderMode mode) {
  return segment_sweep(a, mode, [](const Hyp& mid, const Hyp& floor) { return leq(floor, mid); });
}

ConvexityReport strongly_convex(const DFuzzySet& a) {
  return segment_sweep(a, OrderMode::Lattice,
                       [](const Hyp& mid, const Hyp& floor) { return lt(floor, mid); });
}

std::vector<RadiusEntry> bounding_radius(const DFuzzySet& a) {
  std::vector<RadiusEntry> out;
  for (const Hyp& alpha : candidate_alphas(a)) {
    Hyp radius = Hyp::zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (leq(alpha, a[i])) radius = order_max(radius, point_norm(a.universe().point(i)));
    }
    out.push_back({alpha, radius});
  }
  return out;
}

Supremum essential_supremum(const DFuzzySet& a) {
  Hyp m = a[0];
  for (const Hyp& x : a.values()) m = order_max(m, x);
  const bool attained =
      std::any_of(a.values().begin(), a.values().end(), [&](const Hyp& x) { return x == m; });
  return {m, attained};
}

std::vector<std::size_t> q_set(const DFuzzySet& a, const Hyp& epsilon) {
  if (!lt(Hyp::zero(), epsilon)) {
    throw RangeError("epsilon " + to_string(epsilon) + " must be strictly positive in both components");
  }
  const Hyp floor = essential_supremum(a).value - epsilon;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (leq(floor, a[i])) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> core(const DFuzzySet& a) {
  const Hyp m = essential_supremum(a).value;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == m) out.push_back(i);
  }
  return out;
}

DFuzzySet shadow(const DFuzzySet& a, std::size_t axis) {
  const Universe& universe = a.universe();
  const std::size_t dim = universe.dim();
  if (dim < 2) throw PreconditionError("shadow needs a universe of dimension >= 2");
  if (axis >= dim) {
    throw PreconditionError("shadow axis " + std::to_string(axis) + " out of range for dimension " +
                            std::to_string(dim));
  }
  std::map<std::vector<double>, std::size_t> slot;
  std::vector<double> coords;
  std::vector<Hyp> values;
  std::vector<double> projected(dim - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto p = universe.point(i);
    std::size_t w = 0;
    for (std::size_t d = 0; d < dim; ++d) {
      if (d != axis) projected[w++] = p[d];
    }
    auto [it, inserted] = slot.try_emplace(projected, values.size());
    if (inserted) {
      coords.insert(coords.end(), projected.begin(), projected.end());
      values.push_back(a[i]);
    } else {
      values[it->second] = order_max(values[it->second], a[i]);
    }
  }
  return DFuzzySet(Universe::create(dim - 1, std::move(coords)), std::move(values));
}

ShadowComparison shadow_witness(const DFuzzySet& a, const DFuzzySet& b,
                                std::span<const std::size_t> axes) {
  if (equals(a, b)) return {ShadowComparison::Verdict::Equal, std::nullopt};
  for (std::size_t axis : axes) {
    if (!equals(shadow(a, axis), shadow(b, axis))) {
      return {ShadowComparison::Verdict::Differs, axis};
    }
  }
  return {ShadowComparison::Verdict::Inconclusive, std::nullopt};
}

Hyp separation_degree(const DFuzzySet& a, const DFuzzySet& b, const Hyperplane& h) {
  if (!same_universe(a.universe(), b.universe())) {
    throw UniverseMismatch("separation: operands live on different universes");
  }
  if (h.axis >= a.universe().dim()) {
    throw PreconditionError("hyperplane axis " + std::to_string(h.axis) + " out of range");
  }
  const SideSup sa = side_sups(a, h);
  const SideSup sb = side_sups(b, h);
  // A capped above the hyperplane and B below it, or the other way round.
  const Hyp k_a_above = order_max(sa.above, sb.below);
  const Hyp k_a_below = order_max(sa.below, sb.above);
  return Hyp::one() - order_min(k_a_above, k_a_below);
}

std::vector<Hyperplane> candidate_hyperplanes(const Universe& universe) {
  std::vector<Hyperplane> out;
  for (std::size_t axis = 0; axis < universe.dim(); ++axis) {
    std::vector<double> cs;
    cs.reserve(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) cs.push_back(universe.coord(i, axis));
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    out.push_back({axis, cs.front() - 1.0});
    for (std::size_t r = 1; r < cs.size(); ++r) out.push_back({axis, 0.5 * (cs[r - 1] + cs[r])});
    out.push_back({axis, cs.back() + 1.0});
  }
  return out;
}

SeparationReport optimal_separation(const DFuzzySet& a, const DFuzzySet& b) {
  if (!same_universe(a.universe(), b.universe())) {
    throw UniverseMismatch("separation: operands live on different universes");
  }
  const auto planes = candidate_hyperplanes(a.universe());
  SeparationReport report;
  double best_u = -1.0;
  double best_v = -1.0;
  double best_sum = -1.0;
  for (const Hyperplane& h : planes) {
    const Hyp d = separation_degree(a, b, h);
    if (d.u() > best_u) {
      best_u = d.u();
      report.best_hyperplane_u = h;
    }
    if (d.v() > best_v) {
      best_v = d.v();
      report.best_hyperplane_v = h;
    }
    if (d.u() + d.v() > best_sum) {
      best_sum = d.u() + d.v();
      report.joint_best_degree = d;
      report.joint_hyperplane = h;
    }
  }
  report.best_degree = Hyp(best_u, best_v);
  report.intersection_max = essential_supremum(intersect(a, b)).value;
  return report;
}

std::string_view to_string(ShadowComparison::Verdict verdict) {
  switch (verdict) {
    case ShadowComparison::Verdict::Equal: return "equal";
    case ShadowComparison::Verdict::Differs: return "differs";
    case ShadowComparison::Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace hyperfuzzy
