#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "walkhull/reference_cdf.hpp"

namespace walkhull {

/// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of
/// `samples` and `ref`, evaluated at the sample points with both one-sided
/// gaps (the sup over all reals is attained there).
inline double ks_statistic(std::span<const double> samples, const ReferenceCdf& ref) {
    if (samples.size() < 10) throw std::invalid_argument("ks_statistic: need at least 10 samples");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = ref.cdf(sorted[i]);
        const double lo = f - static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n - f;
        d = std::max({d, lo, hi});
    }
    return d;
}

inline double ks_statistic(const std::vector<double>& samples, const ReferenceCdf& ref) {
    return ks_statistic(std::span<const double>(samples), ref);
}

/// Asymptotic 1% critical value of the KS null distribution, for reference in
/// reports (experiments assert explicit thresholds, not p-values).
inline double ks_critical_1pct(std::size_t n) {
    return 1.6276 / std::sqrt(static_cast<double>(n));
}

} // namespace walkhull
