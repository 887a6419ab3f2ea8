#ifndef ACRI_GRID_HPP
#define ACRI_GRID_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace acri {

/// Sorted, deduplicated sample points of [0,1] containing both endpoints.
/// Uniform grids are snapped onto the 2^-53 lattice (see snap01), so the
/// standard negation maps grid points to exact involution partners.
class Grid {
public:
  /// n equally spaced points including 0 and 1 (default size 101).
  static Grid uniform(std::size_t n = 101);

  /// Arbitrary points; sorted, deduplicated, endpoints added when missing.
  static Grid of(std::vector<double> points);

  const std::vector<double>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// Evenly subsampled grid with at most max_points points (endpoints
  /// kept); used for the cubic-cost triple scans.
  Grid coarsened(std::size_t max_points) const;

  const std::string& describe() const { return desc_; }

private:
  Grid(std::vector<double> pts, std::string desc);

  std::vector<double> points_;
  std::string desc_;
};

}  // namespace acri

#endif
