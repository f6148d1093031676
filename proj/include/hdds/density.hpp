#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hdds/sample.hpp"

namespace hdds {

/// Display interval for a density, retaining the central `coverage` share of
/// the sample mass (or everything above a known lower bound).
struct support_bounds {
    double lo{0.0};
    double hi{1.0};
    double coverage{1.0};
};

/// A density evaluated over an ordered bin partition of [lo, hi].
/// Continuous grids hold density heights at bin midpoints; discrete grids hold
/// one probability mass per integer, on unit-width bins centered on integers.
struct density_grid {
    sample_kind kind{sample_kind::continuous};
    std::vector<double> edges;   // bin boundaries, size = values.size() + 1
    std::vector<double> values;  // nonnegative, one per bin
    double median{0.0};
    std::size_t n{0};
};

inline double max_value(const density_grid& g) {
    double m = 0.0;
    for (double v : g.values) m = std::max(m, v);
    return m;
}

inline support_bounds truncation_bounds(const sample& s, double coverage,
                                        std::optional<double> lower_known = {}) {
    validate(s);
    if (!(coverage > 0.0 && coverage <= 1.0))
        throw std::invalid_argument("coverage must lie in (0,1]");
    std::vector<double> sorted = s.values;
    std::sort(sorted.begin(), sorted.end());
    double lo, hi;
    if (lower_known) {
        lo = *lower_known;
        hi = quantile_sorted(sorted, coverage);
    } else {
        const double alpha = (1.0 - coverage) / 2.0;
        lo = quantile_sorted(sorted, alpha);
        hi = quantile_sorted(sorted, 1.0 - alpha);
    }
    if (!(lo < hi))
        throw std::runtime_error("degenerate support");
    return support_bounds{lo, hi, coverage};
}

/// Rule-of-thumb bandwidth (0.9 * min(sd, IQR/1.34) * n^-1/5), with the usual
/// fallbacks when the scale estimates vanish.
inline double silverman_bandwidth(std::vector<double> values) {
    const std::size_t n = values.size();
    if (n == 0)
        throw std::invalid_argument("bandwidth of empty sample");
    std::sort(values.begin(), values.end());
    double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    const double iqr = quantile_sorted(values, 0.75) - quantile_sorted(values, 0.25);
    double scale = std::min(sd, iqr / 1.34);
    if (scale <= 0.0) scale = sd;
    if (scale <= 0.0) scale = std::fabs(mean);
    if (scale <= 0.0) scale = 1.0;
    return 0.9 * scale * std::pow(static_cast<double>(n), -0.2);
}

namespace detail {

inline std::vector<double> equal_width_edges(double lo, double hi, int n_bins) {
    std::vector<double> edges(static_cast<std::size_t>(n_bins) + 1);
    for (int i = 0; i <= n_bins; ++i)
        edges[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_bins);
    edges.front() = lo;  // pin the extremes so angle maps hit 0 and pi exactly
    edges.back() = hi;
    return edges;
}

// Gaussian kernel sum at x, with the sample mirrored at both bounds so mass
// leaking past the truncation interval is folded back in.
inline double reflected_kernel_sum(double x, const std::vector<double>& xs, double h,
                                   double lo, double hi) {
    constexpr double cutoff2 = 80.0;  // exp(-40) is below any display resolution
    double sum = 0.0;
    auto accum = [&](double center) {
        const double z = (x - center) / h;
        const double z2 = z * z;
        if (z2 < 2.0 * cutoff2) sum += std::exp(-0.5 * z2);
    };
    for (double xi : xs) {
        accum(xi);
        accum(2.0 * lo - xi);
        accum(2.0 * hi - xi);
    }
    return sum;
}

// Nudge the largest mass by the floating-point residual so the bin masses
// accumulate to exactly 1.0.
inline void fix_mass_sum(std::vector<double>& values) {
    for (int pass = 0; pass < 32; ++pass) {
        const double total = std::accumulate(values.begin(), values.end(), 0.0);
        if (total == 1.0) return;
        auto k = std::max_element(values.begin(), values.end());
        *k += 1.0 - total;
    }
}

}  // namespace detail

/// Gaussian-kernel density estimate at the midpoints of n_bins equal-width
/// bins over [bounds.lo, bounds.hi], renormalized so the Riemann sum over the
/// interval is 1.
inline density_grid estimate_continuous(const sample& s, const support_bounds& bounds,
                                        int n_bins = 128,
                                        std::optional<double> bandwidth = {}) {
    validate(s);
    if (s.kind != sample_kind::continuous)
        throw std::invalid_argument("estimate_continuous requires a continuous sample");
    if (n_bins < 2)
        throw std::invalid_argument("n_bins must be at least 2");
    if (bandwidth && !(*bandwidth > 0.0))
        throw std::invalid_argument("bandwidth must be positive");
    if (!(bounds.lo < bounds.hi))
        throw std::runtime_error("degenerate support");

    const double h = bandwidth ? *bandwidth : silverman_bandwidth(s.values);
    const auto n = s.values.size();

    density_grid g;
    g.kind = sample_kind::continuous;
    g.n = n;
    g.edges = detail::equal_width_edges(bounds.lo, bounds.hi, n_bins);
    g.values.resize(static_cast<std::size_t>(n_bins));
    const double kernel_norm = 1.0 / (static_cast<double>(n) * h * std::sqrt(2.0 * M_PI));
    for (int j = 0; j < n_bins; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        const double mid = 0.5 * (g.edges[ju] + g.edges[ju + 1]);
        g.values[ju] =
            kernel_norm * detail::reflected_kernel_sum(mid, s.values, h, bounds.lo, bounds.hi);
    }
    double riemann = 0.0;
    for (int j = 0; j < n_bins; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        riemann += g.values[ju] * (g.edges[ju + 1] - g.edges[ju]);
    }
    if (!(riemann > 0.0))
        throw std::runtime_error("density vanishes on the support interval");
    for (double& v : g.values) v /= riemann;
    g.median = sample_median(s);
    return g;
}

/// Relative-frequency masses on unit bins covering the integers [lo, hi].
/// Unobserved interior integers get zero mass.
inline density_grid estimate_discrete(const sample& s, long long lo, long long hi) {
    validate(s);
    if (s.kind != sample_kind::discrete)
        throw std::invalid_argument("estimate_discrete requires a discrete sample");
    if (lo > hi)
        throw std::invalid_argument("empty integer range");
    const auto n_bins = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::size_t> counts(n_bins, 0);
    for (double v : s.values) {
        const auto k = static_cast<long long>(std::llround(v));
        if (k < lo || k > hi)
            throw std::invalid_argument("sample value outside integer range");
        ++counts[static_cast<std::size_t>(k - lo)];
    }
    density_grid g;
    g.kind = sample_kind::discrete;
    g.n = s.values.size();
    g.edges.resize(n_bins + 1);
    for (std::size_t j = 0; j <= n_bins; ++j)
        g.edges[j] = static_cast<double>(lo + static_cast<long long>(j)) - 0.5;
    g.values.resize(n_bins);
    for (std::size_t j = 0; j < n_bins; ++j)
        g.values[j] = static_cast<double>(counts[j]) / static_cast<double>(g.n);
    detail::fix_mass_sum(g.values);
    g.median = sample_median(s);
    return g;
}

inline density_grid estimate_discrete(const sample& s) {
    validate(s);
    if (s.kind != sample_kind::discrete)
        throw std::invalid_argument("estimate_discrete requires a discrete sample");
    const auto [mn, mx] = std::minmax_element(s.values.begin(), s.values.end());
    return estimate_discrete(s, static_cast<long long>(std::llround(*mn)),
                             static_cast<long long>(std::llround(*mx)));
}

}  // namespace hdds
