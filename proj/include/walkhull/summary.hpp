#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "walkhull/vec2.hpp"

namespace walkhull {

/// Streaming, mergeable moment accumulator (Welford update, Chan merge).
/// Merging two partials agrees with summarizing the concatenation.
class SampleSummary {
public:
    void add(double x) {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
        min_ = std::min(min_, x);
        max_ = std::max(max_, x);
    }

    void merge(const SampleSummary& o) {
        if (o.count_ == 0) return;
        if (count_ == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(count_);
        const double nb = static_cast<double>(o.count_);
        const double delta = o.mean_ - mean_;
        const double n = na + nb;
        mean_ += delta * nb / n;
        m2_ += o.m2_ + delta * delta * na * nb / n;
        count_ += o.count_;
        min_ = std::min(min_, o.min_);
        max_ = std::max(max_, o.max_);
    }

    std::size_t count() const { return count_; }
    double mean() const { return mean_; }
    double variance() const { // unbiased
        if (count_ < 2) throw std::invalid_argument("SampleSummary: need at least 2 samples");
        return std::max(0.0, m2_ / static_cast<double>(count_ - 1));
    }
    double std_error() const { return std::sqrt(variance() / static_cast<double>(count_)); }
    double min() const { return min_; }
    double max() const { return max_; }

private:
    std::size_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
    double min_ = std::numeric_limits<double>::infinity();
    double max_ = -std::numeric_limits<double>::infinity();
};

inline SampleSummary summarize(std::span<const double> samples) {
    if (samples.size() < 2) throw std::invalid_argument("summarize: need at least 2 samples");
    SampleSummary s;
    for (double x : samples) s.add(x);
    return s;
}

inline SampleSummary summarize(const std::vector<double>& samples) {
    return summarize(std::span<const double>(samples));
}

/// Standard error of the unbiased sample variance, from the fourth central
/// moment: Var(s^2) ~ (m4 - (n-3)/(n-1) s^4) / n.
inline double variance_std_error(std::span<const double> samples) {
    const std::size_t n = samples.size();
    if (n < 4) throw std::invalid_argument("variance_std_error: need at least 4 samples");
    const SampleSummary s = summarize(samples);
    const double mean = s.mean();
    double m4 = 0.0;
    for (double x : samples) {
        const double d = x - mean;
        m4 += d * d * d * d;
    }
    m4 /= static_cast<double>(n);
    const double v = s.variance();
    const double nn = static_cast<double>(n);
    const double var_of_var = (m4 - (nn - 3.0) / (nn - 1.0) * v * v) / nn;
    return std::sqrt(std::max(0.0, var_of_var));
}

inline double variance_std_error(const std::vector<double>& samples) {
    return variance_std_error(std::span<const double>(samples));
}

} // namespace walkhull
