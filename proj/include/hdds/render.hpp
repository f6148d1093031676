#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "hdds/geometry.hpp"
#include "hdds/sample.hpp"
#include "hdds/svg.hpp"

namespace hdds {

/// Uniform draw in [0,1) from the top 53 bits of a mt19937_64 output;
/// bit-identical on every platform, unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline constexpr rgb_color black{0.0, 0.0, 0.0};

struct strip_options {
    double cx{0};
    double cy{0};
    bool show_median{false};
    bool show_bound_labels{false};
    double label_size{13.0};
};

/// Jittered data-point positions over a strip, as (angle, radial fraction)
/// pairs. Values outside the strip bounds are dropped and counted.
struct dot_overlay {
    std::vector<std::pair<double, double>> positions;
    double marker_radius{1.0};
    std::size_t dropped{0};
};

namespace detail {

inline double dot_angle_clamp(double a) {
    constexpr double eps = 1e-9;
    return std::clamp(a, eps, M_PI - eps);
}

// Angular extent of the sector containing `angle`.
inline double sector_extent_at(const half_disk_strip& strip, double angle) {
    for (const sector& s : strip.sectors)
        if (angle <= s.theta_end) return s.theta_end - s.theta_start;
    return strip.sectors.back().theta_end - strip.sectors.back().theta_start;
}

inline void median_tick(std::vector<element>& out, const half_disk_strip& strip,
                        double cx, double cy) {
    if (!strip.median_angle) return;
    const double r = strip.diameter / 2.0;
    const double sign = strip.orient == orientation::up ? -1.0 : 1.0;
    const double c = std::cos(*strip.median_angle);
    const double s = std::sin(*strip.median_angle);
    line_elem tick;
    tick.x1 = cx + 0.9 * r * c;
    tick.y1 = cy + sign * 0.9 * r * s;
    tick.x2 = cx + r * c;
    tick.y2 = cy + sign * r * s;
    tick.width = 0.0075 * r;
    tick.stroke = black;
    out.push_back(tick);
}

}  // namespace detail

/// Sector paths for one strip, plus optional median tick and bound labels.
inline std::vector<element> render_strip(const half_disk_strip& strip,
                                         const strip_options& opts) {
    if (strip.sectors.empty())
        throw std::invalid_argument("strip has no sectors");
    std::vector<element> out;
    const double r = strip.diameter / 2.0;
    for (const sector& sec : strip.sectors) {
        sector_elem e;
        e.cx = opts.cx;
        e.cy = opts.cy;
        e.radius = r;
        e.theta_start = sec.theta_start;
        e.theta_end = sec.theta_end;
        e.orient = strip.orient;
        const rgb_color fill = hcl_to_rgb(sec.fill);
        e.fill = fill;
        e.stroke = fill;  // hide antialiasing seams between adjacent sectors
        e.stroke_width = 0.004 * r;
        out.push_back(e);
    }
    // baseline along the flat edge
    out.push_back(line_elem{opts.cx - r, opts.cy, opts.cx + r, opts.cy, 0.0035 * r, black});
    if (opts.show_median) detail::median_tick(out, strip, opts.cx, opts.cy);
    if (opts.show_bound_labels) {
        const double dir = strip.orient == orientation::up ? 1.0 : -1.0;
        const double ly = opts.cy + (dir > 0 ? opts.label_size * 1.2 : -opts.label_size * 0.5);
        for (const auto& [angle, label] : strip.tick_angles) {
            text_elem t;
            t.x = opts.cx + r * std::cos(angle);
            t.y = ly;
            t.size = opts.label_size;
            t.anchor = text_anchor::middle;
            t.text = label;
            out.push_back(t);
        }
    }
    return out;
}

/// Two half disks stacked into a disk: shared center and diameter line, each
/// keeping its own diameter so their lengths stay comparable.
inline std::vector<element> render_disk_pair(const half_disk_strip& top,
                                             const half_disk_strip& bottom,
                                             const strip_options& opts) {
    if (top.orient != orientation::up || bottom.orient != orientation::down)
        throw std::invalid_argument("disk pair requires an up strip over a down strip");
    std::vector<element> out;
    strip_options part = opts;
    part.show_bound_labels = false;
    for (auto& e : render_strip(top, part)) out.push_back(std::move(e));
    for (auto& e : render_strip(bottom, part)) out.push_back(std::move(e));
    const double r_max = std::max(top.diameter, bottom.diameter) / 2.0;
    out.push_back(
        line_elem{opts.cx - r_max, opts.cy, opts.cx + r_max, opts.cy, 0.0035 * r_max, black});
    if (opts.show_bound_labels) {
        text_elem lo;
        lo.x = opts.cx - r_max - opts.label_size * 0.6;
        lo.y = opts.cy + opts.label_size * 0.35;
        lo.size = opts.label_size;
        lo.anchor = text_anchor::end;
        lo.text = top.tick_angles.empty() ? std::string() : top.tick_angles.front().second;
        out.push_back(lo);
        text_elem hi = lo;
        hi.x = opts.cx + r_max + opts.label_size * 0.6;
        hi.anchor = text_anchor::start;
        hi.text = top.tick_angles.empty() ? std::string() : top.tick_angles.back().second;
        out.push_back(hi);
    }
    return out;
}

/// Place data points over a strip. Continuous values map straight to their
/// angle; discrete values get an angular jitter of up to +-35% of their bin's
/// extent so repeated integers separate into a small cloud. All randomness
/// comes from the seed.
inline dot_overlay render_dots(const sample& s, const half_disk_strip& strip,
                               std::uint64_t seed) {
    validate(s);
    if (strip.sectors.empty())
        throw std::invalid_argument("strip has no sectors");
    std::mt19937_64 gen(seed);
    dot_overlay overlay;
    overlay.marker_radius = 0.015 * strip.diameter / 2.0;
    for (double v : s.values) {
        if (v < strip.bounds.lo || v > strip.bounds.hi) {
            ++overlay.dropped;
            continue;
        }
        double angle = map_support_to_angle(v, strip.bounds);
        if (s.kind == sample_kind::discrete) {
            const double extent = detail::sector_extent_at(strip, angle);
            angle += (2.0 * uniform01(gen) - 1.0) * 0.35 * extent;
        }
        const double radial = 0.20 + uniform01(gen) * 0.70;
        overlay.positions.emplace_back(detail::dot_angle_clamp(angle), radial);
    }
    return overlay;
}

/// Dots as circle marks inside the given strip.
inline std::vector<element> render_overlay(const dot_overlay& overlay,
                                           const half_disk_strip& strip,
                                           const strip_options& opts) {
    std::vector<element> out;
    const double r = strip.diameter / 2.0;
    const double sign = strip.orient == orientation::up ? -1.0 : 1.0;
    for (const auto& [angle, radial] : overlay.positions) {
        circle_elem c;
        c.cx = opts.cx + radial * r * std::cos(angle);
        c.cy = opts.cy + sign * radial * r * std::sin(angle);
        c.radius = overlay.marker_radius;
        c.fill = black;
        out.push_back(c);
    }
    return out;
}

}  // namespace hdds
