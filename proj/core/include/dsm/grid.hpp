#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dsm/geometry.hpp"

namespace dsm {

/// Lattice coordinates (i, j) of a grid node: the point (i*step, j*step).
struct LatticeIndex {
    int i{0};
    int j{0};
    friend constexpr bool operator==(LatticeIndex, LatticeIndex) = default;
};

/// Square-lattice nodes inside a centred disk, row-major: j ascending (south to
/// north), then i ascending (west to east).
struct DiskGrid {
    double radius{0.0};
    double step{0.0};
    int half_extent{0};  ///< max |i| and |j|
    std::vector<Point2> points;
    std::vector<LatticeIndex> lattice;

    [[nodiscard]] std::size_t size() const { return points.size(); }

    /// Grid index of lattice node (i, j), if it lies in the disk.
    [[nodiscard]] std::optional<std::size_t> find(LatticeIndex node) const;

    /// Grid index of the node nearest to p, searching the whole grid.
    [[nodiscard]] std::size_t nearest(Point2 p) const;

    /// Side length in nodes of the bounding square raster.
    [[nodiscard]] int raster_width() const { return 2 * half_extent + 1; }

private:
    friend DiskGrid build_disk_grid(double radius, double step);
    std::vector<long> slot_;  // raster_width^2 lookup, -1 outside the disk
};

/// Relative slack applied to |r| <= radius so lattice points that lie on the
/// circle in exact arithmetic are not dropped by rounding.
inline constexpr double kGridBoundarySlack = 1e-12;

/// Throws ConfigError unless 0 < step < radius.
[[nodiscard]] DiskGrid build_disk_grid(double radius, double step);

}  // namespace dsm
