#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdds {

enum class sample_kind { continuous, discrete };

/// An observed univariate sample. Discrete samples hold integer-valued doubles.
struct sample {
    std::vector<double> values;
    sample_kind kind{sample_kind::continuous};
};

inline bool is_integer_valued(double v) { return std::nearbyint(v) == v; }

inline void validate(const sample& s) {
    if (s.values.empty())
        throw std::invalid_argument("sample is empty");
    for (double v : s.values) {
        if (!std::isfinite(v))
            throw std::invalid_argument("sample contains non-finite value");
        if (s.kind == sample_kind::discrete && !is_integer_valued(v))
            throw std::invalid_argument("discrete sample contains non-integer value");
    }
}

inline sample make_sample(std::vector<double> values, sample_kind kind) {
    sample s{std::move(values), kind};
    validate(s);
    return s;
}

/// Quantile of a sorted vector, linear interpolation between order statistics
/// (the R type-7 convention). p must lie in [0, 1].
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty())
        throw std::invalid_argument("quantile of empty vector");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("quantile probability outside [0,1]");
    const std::size_t n = sorted.size();
    const double h = static_cast<double>(n - 1) * p;
    const auto i = static_cast<std::size_t>(h);
    if (i + 1 >= n)
        return sorted.back();
    const double frac = h - static_cast<double>(i);
    return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

inline double quantile(std::vector<double> values, double p) {
    std::sort(values.begin(), values.end());
    return quantile_sorted(values, p);
}

/// Order-statistic median; mean of the two central values for even n.
inline double sample_median(const sample& s) {
    validate(s);
    return quantile(s.values, 0.5);
}

}  // namespace hdds
