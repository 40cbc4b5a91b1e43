#include "hyperfuzzy/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hyperfuzzy/convex.hpp"
#include "hyperfuzzy/error.hpp"

namespace hyperfuzzy::testkit {

Generator::Generator(const GenConfig& cfg) : cfg_(cfg), engine_(cfg.seed) {
  if (cfg_.grid_divisions == 0) throw PreconditionError("grid_divisions must be positive");
  if (cfg_.min_points == 0 || cfg_.min_points > cfg_.max_points) {
    throw PreconditionError("point range must satisfy 1 <= min_points <= max_points");
  }
  if (cfg_.dim != 1 && cfg_.dim != 2) throw PreconditionError("generator supports dim 1 or 2");
}

std::size_t Generator::below(std::size_t n) {
  if (n == 0) throw PreconditionError("below(0)");
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::size_t>(x % bound);
}

double Generator::real(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + unit * (hi - lo);
}

double Generator::level() {
  const unsigned d = cfg_.grid_divisions;
  return static_cast<double>(below(d + 1)) / d;
}

Hyp Generator::hyp() {
  if (cfg_.allow_zero_divisors) {
    const double u = level();
    return Hyp(u, level());
  }
  // 0 or a pair of strictly positive levels, uniformly.
  const std::size_t d = cfg_.grid_divisions;
  const std::size_t k = below(d * d + 1);
  if (k == 0) return Hyp::zero();
  const double den = static_cast<double>(d);
  return Hyp(static_cast<double>(1 + (k - 1) % d) / den, static_cast<double>(1 + (k - 1) / d) / den);
}

UniversePtr Generator::universe() {
  if (cfg_.dim == 1) return Universe::line(between(cfg_.min_points, cfg_.max_points));
  const std::size_t w = between(cfg_.min_points, cfg_.max_points);
  const std::size_t h = between(cfg_.min_points, cfg_.max_points);
  const std::size_t extents[] = {w, h};
  return Universe::grid(extents);
}

DFuzzySet Generator::set(const UniversePtr& universe) {
  std::vector<Hyp> values;
  values.reserve(universe->size());
  for (std::size_t i = 0; i < universe->size(); ++i) values.push_back(hyp());
  return DFuzzySet(universe, std::move(values));
}

std::vector<double> Generator::unimodal_profile(std::size_t n, std::size_t peak, bool strict) {
  if (n == 0) return {};
  if (peak >= n) throw PreconditionError("peak index out of range");
  const unsigned d = cfg_.grid_divisions;
  std::vector<unsigned> ks;
  if (strict) {
    if (n > d + 1) throw PreconditionError("not enough distinct levels for a strict profile");
    std::vector<unsigned> pool(d + 1);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::size_t i = 0; i < n; ++i) {
      std::swap(pool[i], pool[i + below(pool.size() - i)]);
    }
    ks.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
  } else {
    for (std::size_t i = 0; i < n; ++i) ks.push_back(static_cast<unsigned>(below(d + 1)));
  }
  std::sort(ks.begin(), ks.end());

  // The maximum goes to the peak; the rest are split at random into a rising
  // left flank and a falling right flank.
  std::vector<std::size_t> slots(n - 1);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
    std::swap(slots[i], slots[i + below(slots.size() - i)]);
  }
  std::vector<unsigned> left;
  std::vector<unsigned> right;
  for (std::size_t r = 0; r < slots.size(); ++r) {
    (r < peak ? left : right).push_back(ks[slots[r]]);
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end(), std::greater<>());

  std::vector<double> out;
  out.reserve(n);
  const double den = static_cast<double>(d);
  for (unsigned k : left) out.push_back(k / den);
  out.push_back(ks.back() / den);
  for (unsigned k : right) out.push_back(k / den);
  return out;
}

namespace {

/// Rank of each point's coordinate along `axis` among the distinct values.
std::vector<std::size_t> axis_ranks(const Universe& universe, std::size_t axis,
                                    std::size_t& distinct) {
  std::vector<double> cs;
  for (std::size_t i = 0; i < universe.size(); ++i) cs.push_back(universe.coord(i, axis));
  std::vector<double> sorted = cs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  distinct = sorted.size();
  std::vector<std::size_t> ranks;
  ranks.reserve(cs.size());
  for (double c : cs) {
    ranks.push_back(static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                                             sorted.begin()));
  }
  return ranks;
}

}  // namespace

DFuzzySet Generator::convex_set(const UniversePtr& universe, ConvexShape shape) {
  const std::size_t dim = universe->dim();
  if (dim > 2) throw PreconditionError("convex_set supports 1-D and 2-D universes");
  if (shape.strict && dim != 1) throw PreconditionError("strict profiles are 1-D only");

  std::vector<Hyp> values(universe->size());
  if (dim == 1) {
    std::size_t n = 0;
    const auto rank = axis_ranks(*universe, 0, n);
    const std::size_t pu = below(n);
    const std::size_t pv = shape.shared_peak ? pu : below(n);
    const auto gu = unimodal_profile(n, pu, shape.strict);
    const auto gv = unimodal_profile(n, pv, shape.strict);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = Hyp(gu[rank[i]], gv[rank[i]]);
  } else {
    std::size_t nx = 0;
    std::size_t ny = 0;
    const auto rx = axis_ranks(*universe, 0, nx);
    const auto ry = axis_ranks(*universe, 1, ny);
    const std::size_t pxu = below(nx);
    const std::size_t pyu = below(ny);
    const std::size_t pxv = shape.shared_peak ? pxu : below(nx);
    const std::size_t pyv = shape.shared_peak ? pyu : below(ny);
    const auto xu = unimodal_profile(nx, pxu, false);
    const auto yu = unimodal_profile(ny, pyu, false);
    const auto xv = unimodal_profile(nx, pxv, false);
    const auto yv = unimodal_profile(ny, pyv, false);
    for (std::size_t i = 0; i < values.size(); ++i) {
      values[i] = Hyp(std::min(xu[rx[i]], yu[ry[i]]), std::min(xv[rx[i]], yv[ry[i]]));
    }
  }

  DFuzzySet result(universe, std::move(values));
  if (!convex_pointwise(result).convex) {
    throw std::logic_error("convex generator produced a non-convex set: " + describe(result));
  }
  if (shape.strict && !strongly_convex(result).convex) {
    throw std::logic_error("strict generator produced a set that is not strongly convex: " +
                           describe(result));
  }
  return result;
}

// ---- exhaustive enumeration ---------------------------------------------

std::size_t enumerate_sets(std::size_t points, std::span<const Hyp> values,
                           const std::function<void(const DFuzzySet&)>& visit) {
  if (points == 0 || values.empty()) return 0;
  std::size_t total = 1;
  for (std::size_t i = 0; i < points; ++i) {
    total *= values.size();
    if (total > kExhaustiveBudget) {
      throw PreconditionError("exhaustive enumeration exceeds the budget of " +
                              std::to_string(kExhaustiveBudget) + " sets");
    }
  }
  const UniversePtr universe = Universe::line(points);
  std::vector<std::size_t> digits(points, 0);
  std::vector<Hyp> grades(points, values[0]);
  for (std::size_t count = 0; count < total; ++count) {
    visit(DFuzzySet(universe, grades));
    for (std::size_t p = points; p-- > 0;) {
      if (++digits[p] < values.size()) {
        grades[p] = values[digits[p]];
        break;
      }
      digits[p] = 0;
      grades[p] = values[0];
    }
  }
  return total;
}

std::vector<Hyp> level_pairs(std::span<const double> levels) {
  std::vector<Hyp> out;
  for (double u : levels) {
    for (double v : levels) out.emplace_back(u, v);
  }
  return out;
}

std::size_t exhaustive_oracle(std::size_t max_points, std::span<const double> levels,
                              const std::function<void(const DFuzzySet&)>& visit) {
  if (max_points > 5 || levels.size() > 4) {
    throw PreconditionError("exhaustive oracle is limited to 5 points and 4 levels per component");
  }
  const auto values = level_pairs(levels);
  std::size_t visited = 0;
  for (std::size_t n = 1; n <= max_points; ++n) visited += enumerate_sets(n, values, visit);
  return visited;
}

// ---- oracles ------------------------------------------------------------

namespace {

bool quasi_concave_on_line(const Universe& universe, std::span<const double> g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return universe.coord(a, 0) < universe.coord(b, 0); });
  std::vector<double> left_max(n, -1.0);
  std::vector<double> right_max(n, -1.0);
  for (std::size_t p = 1; p < n; ++p) left_max[p] = std::max(left_max[p - 1], g[order[p - 1]]);
  for (std::size_t p = n - 1; p-- > 0;) right_max[p] = std::max(right_max[p + 1], g[order[p + 1]]);
  for (std::size_t p = 1; p + 1 < n; ++p) {
    if (g[order[p]] < std::min(left_max[p], right_max[p])) return false;
  }
  return true;
}

bool strictly_between(std::span<const double> a, std::span<const double> b,
                      std::span<const double> c) {
  // c = a + t (b - a) with 0 < t < 1, tested through 2x2 minors.
  const std::size_t dim = a.size();
  double dot = 0.0;
  double len2 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    dot += (c[i] - a[i]) * (b[i] - a[i]);
    len2 += (b[i] - a[i]) * (b[i] - a[i]);
  }
  if (!(dot > 0.0 && dot < len2)) return false;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double minor = (c[i] - a[i]) * (b[j] - a[j]) - (c[j] - a[j]) * (b[i] - a[i]);
      if (std::fabs(minor) > 1e-9 * std::max(1.0, len2)) return false;
    }
  }
  return true;
}

}  // namespace

bool scalar_quasi_concave(const Universe& universe, std::span<const double> grades) {
  if (grades.size() != universe.size()) throw LengthMismatch("grade count differs from universe size");
  if (universe.dim() == 1) return quasi_concave_on_line(universe, grades);
  const std::size_t n = universe.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double floor = std::min(grades[i], grades[j]);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || grades[k] >= floor) continue;
        if (strictly_between(universe.point(i), universe.point(j), universe.point(k))) return false;
      }
    }
  }
  return true;
}

bool has_zero_divisor_grade(const DFuzzySet& a) {
  return std::any_of(a.values().begin(), a.values().end(),
                     [](const Hyp& x) { return is_zero_divisor(x); });
}

std::string describe(const DFuzzySet& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += to_string(a[i]);
  }
  return out + "]";
}

}  // namespace hyperfuzzy::testkit
