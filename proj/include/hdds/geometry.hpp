#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hdds/color.hpp"
#include "hdds/density.hpp"

namespace hdds {

enum class orientation { up, down };

/// One shaded circular sector; angles in radians within [0, pi].
struct sector {
    double theta_start{0.0};
    double theta_end{0.0};
    hcl_color fill;
};

/// A half disk tessellated into contiguous sectors spanning [0, pi].
/// Angle 0 is the right end (upper bound), pi the left end (lower bound);
/// a `down` strip mirrors across the horizontal diameter at render time.
struct half_disk_strip {
    double diameter{1.0};
    orientation orient{orientation::up};
    std::vector<sector> sectors;
    std::optional<double> median_angle;
    support_bounds bounds;
    std::vector<std::pair<double, std::string>> tick_angles;
};

/// Linear support-to-angle map: lo -> pi (left), hi -> 0 (right).
inline double map_support_to_angle(double value, const support_bounds& b) {
    if (!(b.lo < b.hi))
        throw std::invalid_argument("degenerate support");
    if (!(value >= b.lo && value <= b.hi))
        throw std::invalid_argument("value outside support bounds");
    return M_PI * (b.hi - value) / (b.hi - b.lo);
}

inline std::string format_bound_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return std::string(buf);
}

/// One sector per grid bin, shaded through the context. The diameter only
/// sizes the plot; angles and fills are independent of it.
inline half_disk_strip tessellate(const density_grid& grid, const shading_context& ctx,
                                  double diameter, orientation orient = orientation::up) {
    if (!(diameter > 0.0))
        throw std::invalid_argument("diameter must be positive");
    if (grid.values.empty() || grid.edges.size() != grid.values.size() + 1)
        throw std::invalid_argument("malformed density grid");

    half_disk_strip strip;
    strip.diameter = diameter;
    strip.orient = orient;
    strip.bounds = support_bounds{grid.edges.front(), grid.edges.back(), 1.0};

    const std::size_t m = grid.values.size();
    strip.sectors.reserve(m);
    // Sectors run from angle 0 (last bin, upper bound) to pi (first bin).
    for (std::size_t j = m; j-- > 0;) {
        sector sec;
        sec.theta_start = map_support_to_angle(grid.edges[j + 1], strip.bounds);
        sec.theta_end = map_support_to_angle(grid.edges[j], strip.bounds);
        sec.fill = shade(grid.values[j], ctx);
        strip.sectors.push_back(sec);
    }
    if (grid.median >= strip.bounds.lo && grid.median <= strip.bounds.hi)
        strip.median_angle = map_support_to_angle(grid.median, strip.bounds);
    strip.tick_angles = {{M_PI, format_bound_label(strip.bounds.lo)},
                         {0.0, format_bound_label(strip.bounds.hi)}};
    return strip;
}

/// Diameter scaling law d = d_base * p^k; cells with probability 0 vanish.
inline double diameter_scale(double p, double k, double d_base) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("probability outside [0,1]");
    if (!(k > 0.0))
        throw std::invalid_argument("scaling exponent must be positive");
    if (!(d_base > 0.0))
        throw std::invalid_argument("baseline diameter must be positive");
    return d_base * std::pow(p, k);
}

}  // namespace hdds
