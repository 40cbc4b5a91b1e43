#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperfuzzy {

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// A universe point lying strictly inside the segment from point `first`
/// to point `second`, at first + lambda * (second - first).
struct SegmentPoint {
  std::size_t index = 0;
  double lambda = 0.0;

  bool operator==(const SegmentPoint&) const = default;
};

/// Collinearity tolerance used to decide whether a point sits on a segment.
inline constexpr double kCollinearityTolerance = 1e-9;

/**
 * Finite, ordered set of distinct points in E^n.
 *
 * Universes are immutable and always handled through UniversePtr so that
 * fuzzy sets over the same universe share one instance (and one segment
 * table). Index order is the iteration order of every operation.
 */
class Universe {
 public:
  /// `coords` holds size*dim values, point-major. Throws ValidationError on
  /// empty input, dim == 0, non-finite coordinates, duplicate points, or a
  /// label list whose length does not match.
  static UniversePtr create(std::size_t dim, std::vector<double> coords,
                            std::vector<std::string> labels = {});

  static UniversePtr from_points(const std::vector<std::vector<double>>& points,
                                 std::vector<std::string> labels = {});

  /// Integer points 0..n-1 on the real line.
  static UniversePtr line(std::size_t n);

  /// Integer lattice with the given extents, row-major (first axis outermost).
  static UniversePtr grid(std::span<const std::size_t> extents);

  /// X × Y with X outer, Y inner. Labels are joined as "(x, y)" when both
  /// factors carry labels.
  static UniversePtr product(const Universe& x, const Universe& y);

  Universe(const Universe&) = delete;
  Universe& operator=(const Universe&) = delete;

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return coords_.size() / dim_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  double coord(std::size_t i, std::size_t axis) const { return coords_[i * dim_ + axis]; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label if present, otherwise the coordinates as "(x, y, ...)".
  std::string describe(std::size_t i) const;

  std::optional<std::size_t> find(std::span<const double> p) const;

  /// Same dimension and identical point list (labels ignored).
  bool same_points(const Universe& other) const;

  /// Points strictly inside the segment between i and j (i != j), sorted by
  /// lambda measured from i.
  std::vector<SegmentPoint> segment(std::size_t i, std::size_t j) const;

  /// segment() for i < j without copying. The table behind it is computed
  /// once per universe on first use.
  std::span<const SegmentPoint> ordered_segment(std::size_t i, std::size_t j) const;

 private:
  Universe(std::size_t dim, std::vector<double> coords, std::vector<std::string> labels);

  struct SegmentTable {
    std::vector<std::size_t> offsets;  // one slot per unordered pair, CSR style
    std::vector<SegmentPoint> entries;
  };

  void build_segments() const;
  std::size_t pair_slot(std::size_t i, std::size_t j) const;

  std::size_t dim_;
  std::vector<double> coords_;
  std::vector<std::string> labels_;

  mutable std::once_flag segments_once_;
  mutable SegmentTable segments_;
};

/// Same instance, or same points.
bool same_universe(const Universe& a, const Universe& b);

}  // namespace hyperfuzzy
