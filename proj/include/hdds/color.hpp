#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdds/density.hpp"

namespace hdds {

/// Hue-chroma-luminance color (polar CIE LUV). Hue in degrees, luminance in
/// [0, 100]; chroma 0 is achromatic.
struct hcl_color {
    double hue{0.0};
    double chroma{0.0};
    double luminance{0.0};
};

/// Display sRGB with components in [0, 1].
struct rgb_color {
    double r{0.0};
    double g{0.0};
    double b{0.0};
};

/// Shared shading state for a set of co-displayed densities: the dark color
/// reached at the maximum density, the gamma exponent, and the normalization
/// constant that makes equal densities render as equal shades everywhere.
struct shading_context {
    hcl_color base{10.0, 90.0, 30.0};
    double gamma{1.0};
    double norm{1.0};

    hcl_color white() const { return hcl_color{base.hue, 0.0, 100.0}; }
};

inline shading_context make_context(std::span<const density_grid* const> grids,
                                    hcl_color base, double gamma = 1.0) {
    if (!(gamma > 0.0))
        throw std::invalid_argument("gamma must be positive");
    if (grids.empty())
        throw std::invalid_argument("make_context requires at least one grid");
    double norm = 0.0;
    for (const density_grid* g : grids) norm = std::max(norm, max_value(*g));
    if (!(norm > 0.0))
        throw std::runtime_error("degenerate context");
    return shading_context{base, gamma, norm};
}

inline shading_context make_context(const std::vector<density_grid>& grids,
                                    hcl_color base, double gamma = 1.0) {
    std::vector<const density_grid*> ptrs;
    ptrs.reserve(grids.size());
    for (const auto& g : grids) ptrs.push_back(&g);
    return make_context(std::span<const density_grid* const>(ptrs), base, gamma);
}

/// Mix between white and the context's base color: weight w = (f/norm)^gamma.
/// Hue is held at the base hue; only chroma and luminance interpolate.
inline hcl_color shade(double f_value, const shading_context& ctx) {
    if (!(f_value >= 0.0))
        throw std::invalid_argument("density value must be nonnegative");
    const double p = std::min(f_value / ctx.norm, 1.0);
    const double w = std::pow(p, ctx.gamma);
    return hcl_color{ctx.base.hue, w * ctx.base.chroma,
                     w * ctx.base.luminance + (1.0 - w) * 100.0};
}

namespace detail {

// D65 white point (2 degree observer) and its u'v' chromaticity.
inline constexpr double white_x = 0.95047;
inline constexpr double white_y = 1.00000;
inline constexpr double white_z = 1.08883;
inline const double white_u = 4.0 * white_x / (white_x + 15.0 * white_y + 3.0 * white_z);
inline const double white_v = 9.0 * white_y / (white_x + 15.0 * white_y + 3.0 * white_z);

inline double srgb_encode(double t) {
    t = std::clamp(t, 0.0, 1.0);
    return t <= 0.0031308 ? 12.92 * t : 1.055 * std::pow(t, 1.0 / 2.4) - 0.055;
}

inline double luv_y(double l) {
    // CIE lightness inverse; the low branch is L/kappa with kappa = (29/3)^3.
    if (l <= 0.0) return 0.0;
    if (l > 8.0) {
        const double t = (l + 16.0) / 116.0;
        return t * t * t;
    }
    return l * (3.0 / 29.0) * (3.0 / 29.0) * (3.0 / 29.0);
}

}  // namespace detail

/// Polar LUV -> LUV -> XYZ (D65) -> linear sRGB -> encoded sRGB, with each
/// channel clamped to [0,1] when the color falls outside the sRGB gamut.
/// Achromatic inputs take an exact gray path so r == g == b holds exactly.
inline rgb_color hcl_to_rgb(const hcl_color& c) {
    if (c.chroma == 0.0) {
        const double gray = detail::srgb_encode(detail::luv_y(c.luminance));
        return rgb_color{gray, gray, gray};
    }
    const double hue_rad = c.hue * (M_PI / 180.0);
    const double u = c.chroma * std::cos(hue_rad);
    const double v = c.chroma * std::sin(hue_rad);

    double x = 0.0, y = 0.0, z = 0.0;
    if (c.luminance > 0.0) {
        y = detail::white_y * detail::luv_y(c.luminance);
        const double up = u / (13.0 * c.luminance) + detail::white_u;
        const double vp = v / (13.0 * c.luminance) + detail::white_v;
        x = y * (9.0 * up) / (4.0 * vp);
        z = y * (12.0 - 3.0 * up - 20.0 * vp) / (4.0 * vp);
    }

    const double rl = 3.2404542 * x - 1.5371385 * y - 0.4985314 * z;
    const double gl = -0.9692660 * x + 1.8760108 * y + 0.0415560 * z;
    const double bl = 0.0556434 * x - 0.2040259 * y + 1.0572252 * z;
    return rgb_color{detail::srgb_encode(rl), detail::srgb_encode(gl),
                     detail::srgb_encode(bl)};
}

inline std::string to_hex(const rgb_color& c) {
    auto chan = [](double v) {
        return static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
    };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", chan(c.r), chan(c.g), chan(c.b));
    return std::string(buf);
}

}  // namespace hdds
