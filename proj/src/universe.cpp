#include "hyperfuzzy/universe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperfuzzy/error.hpp"
#include "hyperfuzzy/hypnum.hpp"

namespace hyperfuzzy {

Universe::Universe(std::size_t dim, std::vector<double> coords, std::vector<std::string> labels)
    : dim_(dim), coords_(std::move(coords)), labels_(std::move(labels)) {}

UniversePtr Universe::create(std::size_t dim, std::vector<double> coords,
                             std::vector<std::string> labels) {
  if (dim == 0) throw ValidationError("universe dimension must be positive");
  if (coords.empty()) throw ValidationError("universe must contain at least one point");
  if (coords.size() % dim != 0) {
    throw ValidationError("coordinate count " + std::to_string(coords.size()) +
                          " is not a multiple of dimension " + std::to_string(dim));
  }
  const std::size_t n = coords.size() / dim;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!std::isfinite(coords[i])) {
      throw ValidationError("point " + std::to_string(i / dim) + " has a non-finite coordinate");
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw ValidationError("got " + std::to_string(labels.size()) + " labels for " +
                          std::to_string(n) + " points");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto pt = [&](std::size_t i) { return coords.begin() + static_cast<std::ptrdiff_t>(i * dim); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(pt(a), pt(a) + static_cast<std::ptrdiff_t>(dim), pt(b),
                                        pt(b) + static_cast<std::ptrdiff_t>(dim));
  });
  for (std::size_t r = 1; r < n; ++r) {
    const std::size_t a = order[r - 1];
    const std::size_t b = order[r];
    if (std::equal(pt(a), pt(a) + static_cast<std::ptrdiff_t>(dim), pt(b))) {
      throw ValidationError("duplicate universe point at indices " + std::to_string(std::min(a, b)) +
                            " and " + std::to_string(std::max(a, b)));
    }
  }

  return UniversePtr(new Universe(dim, std::move(coords), std::move(labels)));
}

UniversePtr Universe::from_points(const std::vector<std::vector<double>>& points,
                                  std::vector<std::string> labels) {
  if (points.empty()) throw ValidationError("universe must contain at least one point");
  const std::size_t dim = points.front().size();
  std::vector<double> coords;
  coords.reserve(points.size() * dim);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) {
      throw ValidationError("point " + std::to_string(i) + " has " +
                            std::to_string(points[i].size()) + " coordinates, expected " +
                            std::to_string(dim));
    }
    coords.insert(coords.end(), points[i].begin(), points[i].end());
  }
  return create(dim, std::move(coords), std::move(labels));
}

UniversePtr Universe::line(std::size_t n) {
  const std::size_t extents[] = {n};
  return grid(extents);
}

UniversePtr Universe::grid(std::span<const std::size_t> extents) {
  if (extents.empty()) throw ValidationError("grid needs at least one axis");
  std::size_t total = 1;
  for (std::size_t e : extents) total *= e;
  const std::size_t dim = extents.size();
  std::vector<double> coords(total * dim);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rest = i;
    for (std::size_t axis = dim; axis-- > 0;) {
      coords[i * dim + axis] = static_cast<double>(rest % extents[axis]);
      rest /= extents[axis];
    }
  }
  return create(dim, std::move(coords));
}

UniversePtr Universe::product(const Universe& x, const Universe& y) {
  const std::size_t dim = x.dim() + y.dim();
  std::vector<double> coords;
  coords.reserve(x.size() * y.size() * dim);
  std::vector<std::string> labels;
  const bool labelled = x.has_labels() && y.has_labels();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const auto px = x.point(i);
      const auto py = y.point(j);
      coords.insert(coords.end(), px.begin(), px.end());
      coords.insert(coords.end(), py.begin(), py.end());
      if (labelled) labels.push_back("(" + x.labels()[i] + ", " + y.labels()[j] + ")");
    }
  }
  return create(dim, std::move(coords), std::move(labels));
}

std::string Universe::describe(std::size_t i) const {
  if (has_labels()) return labels_[i];
  std::string out = "(";
  for (std::size_t a = 0; a < dim_; ++a) {
    if (a) out += ", ";
    out += format_real(coord(i, a));
  }
  return out + ")";
}

std::optional<std::size_t> Universe::find(std::span<const double> p) const {
  if (p.size() != dim_) return std::nullopt;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto q = point(i);
    if (std::equal(q.begin(), q.end(), p.begin())) return i;
  }
  return std::nullopt;
}

bool Universe::same_points(const Universe& other) const {
  return dim_ == other.dim_ && coords_ == other.coords_;
}

bool same_universe(const Universe& a, const Universe& b) {
  return &a == &b || a.same_points(b);
}

// ---- segment table -----------------------------------------------------

std::size_t Universe::pair_slot(std::size_t i, std::size_t j) const {
  const std::size_t n = size();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

void Universe::build_segments() const {
  const std::size_t n = size();
  const std::size_t pairs = n * (n - 1) / 2;
  segments_.offsets.assign(pairs + 1, 0);
  std::vector<double> dir(dim_);
  std::vector<SegmentPoint> found;
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = point(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto pj = point(j);
      double len2 = 0.0;
      for (std::size_t a = 0; a < dim_; ++a) {
        dir[a] = pj[a] - pi[a];
        len2 += dir[a] * dir[a];
      }
      const double tol = kCollinearityTolerance * std::max(1.0, std::sqrt(len2));
      found.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const auto pk = point(k);
        double dot = 0.0;
        for (std::size_t a = 0; a < dim_; ++a) dot += (pk[a] - pi[a]) * dir[a];
        const double lambda = dot / len2;
        if (!(lambda > 0.0 && lambda < 1.0)) continue;
        double resid2 = 0.0;
        for (std::size_t a = 0; a < dim_; ++a) {
          const double r = pk[a] - pi[a] - lambda * dir[a];
          resid2 += r * r;
        }
        if (std::sqrt(resid2) <= tol) found.push_back({k, lambda});
      }
      std::sort(found.begin(), found.end(),
                [](const SegmentPoint& a, const SegmentPoint& b) { return a.lambda < b.lambda; });
      segments_.entries.insert(segments_.entries.end(), found.begin(), found.end());
      segments_.offsets[pair_slot(i, j) + 1] = segments_.entries.size();
    }
  }
}

std::span<const SegmentPoint> Universe::ordered_segment(std::size_t i, std::size_t j) const {
  std::call_once(segments_once_, [this] { build_segments(); });
  const std::size_t slot = pair_slot(i, j);
  const std::size_t begin = segments_.offsets[slot];
  const std::size_t end = segments_.offsets[slot + 1];
  return {segments_.entries.data() + begin, end - begin};
}

std::vector<SegmentPoint> Universe::segment(std::size_t i, std::size_t j) const {
  if (i == j || i >= size() || j >= size()) {
    throw PreconditionError("segment endpoints must be two distinct point indices");
  }
  if (i < j) {
    const auto s = ordered_segment(i, j);
    return {s.begin(), s.end()};
  }
  const auto s = ordered_segment(j, i);
  std::vector<SegmentPoint> out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back({it->index, 1.0 - it->lambda});
  return out;
}

}  // namespace hyperfuzzy
