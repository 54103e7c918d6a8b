#include "dsm/grid.hpp"

#include <cmath>
#include <limits>

#include "dsm/errors.hpp"

namespace dsm {

std::optional<std::size_t> DiskGrid::find(LatticeIndex node) const {
    if (std::abs(node.i) > half_extent || std::abs(node.j) > half_extent) {
        return std::nullopt;
    }
    const int w = raster_width();
    const long slot = slot_[static_cast<std::size_t>((node.j + half_extent) * w + (node.i + half_extent))];
    if (slot < 0) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(slot);
}

std::size_t DiskGrid::nearest(Point2 p) const {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < points.size(); ++n) {
        const double d = distance(points[n], p);
        if (d < best_d) {
            best_d = d;
            best = n;
        }
    }
    return best;
}

DiskGrid build_disk_grid(double radius, double step) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw ConfigError("search.step_m must be positive");
    }
    if (!(radius > step) || !std::isfinite(radius)) {
        throw ConfigError("search.radius_m must exceed search.step_m");
    }
    DiskGrid grid;
    grid.radius = radius;
    grid.step = step;
    const double limit = radius * (1.0 + kGridBoundarySlack);
    grid.half_extent = static_cast<int>(std::floor(limit / step));
    const int h = grid.half_extent;
    const int w = grid.raster_width();
    grid.slot_.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(w), -1);
    for (int j = -h; j <= h; ++j) {
        for (int i = -h; i <= h; ++i) {
            const Point2 p{i * step, j * step};
            if (norm(p) <= limit) {
                grid.slot_[static_cast<std::size_t>((j + h) * w + (i + h))] = static_cast<long>(grid.points.size());
                grid.points.push_back(p);
                grid.lattice.push_back({i, j});
            }
        }
    }
    return grid;
}

}  // namespace dsm
