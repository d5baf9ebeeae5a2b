#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace walkhull {

namespace detail {

// erfc without libm's erf, so every language binding can reproduce the same
// numbers from the same published formulas:
//  - |x| < 2.5: erf via the confluent series erf(x) = (2/sqrt(pi)) e^{-x^2}
//    sum_k (2x^2)^k x / (2k+1)!!   (Abramowitz & Stegun 7.1.6; all terms
//    positive, no cancellation),
//  - x >= 2.5: the Laplace continued fraction for erfc (A&S 7.1.14) evaluated
//    by the modified Lentz method.
// Absolute error is below 1e-14 either way.
inline double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 200; ++k) {
        term *= 2.0 * x2 / (2.0 * static_cast<double>(k) + 1.0);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    constexpr double two_over_sqrt_pi = 1.1283791670955126;
    return two_over_sqrt_pi * std::exp(-x2) * sum;
}

inline double erfc_continued_fraction(double x) {
    // G = x + (1/2)/(x + 1/(x + (3/2)/(x + 2/(x + ...)))), erfc = e^{-x^2}/(sqrt(pi) G)
    constexpr double tiny = 1e-300;
    double f = x;
    double c = f;
    double d = 0.0;
    for (int k = 1; k < 300; ++k) {
        const double a = 0.5 * static_cast<double>(k);
        d = x + a * d;
        if (std::abs(d) < tiny) d = tiny;
        d = 1.0 / d;
        c = x + a / c;
        if (std::abs(c) < tiny) c = tiny;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    constexpr double one_over_sqrt_pi = 0.5641895835477563;
    return one_over_sqrt_pi * std::exp(-x * x) / f;
}

inline double erfc_positive(double x) {
    return x < 2.5 ? 1.0 - erf_series(x) : erfc_continued_fraction(x);
}

} // namespace detail

/// erf/erfc companions; accurate to better than 1e-12 absolute.
inline double erfc_approx(double x) {
    if (x < 0.0) return 2.0 - detail::erfc_positive(-x);
    return detail::erfc_positive(x);
}

inline double erf_approx(double x) { return 1.0 - erfc_approx(x); }

/// Standard normal CDF.
inline double normal_cdf(double x) {
    constexpr double inv_sqrt2 = 0.7071067811865476;
    return 0.5 * erfc_approx(-x * inv_sqrt2);
}

/// Reference law for goodness-of-fit checks: N(0,1), the law of c * zeta^2 for
/// zeta ~ N(0,1), or an empirical CDF over a frozen sample.
class ReferenceCdf {
public:
    static ReferenceCdf standard_normal() { return ReferenceCdf(Normal{}); }

    static ReferenceCdf scaled_chi_sq1(double c) {
        if (!(c > 0.0)) throw std::invalid_argument("scaled_chi_sq1: need c > 0");
        return ReferenceCdf(ChiSq{c});
    }

    static ReferenceCdf empirical(std::vector<double> samples) {
        if (samples.empty()) throw std::invalid_argument("empirical cdf: no samples");
        std::sort(samples.begin(), samples.end());
        return ReferenceCdf(Empirical{std::move(samples)});
    }

    double cdf(double x) const {
        switch (kind_.index()) {
            case 0:
                return normal_cdf(x);
            case 1: {
                const double c = std::get<ChiSq>(kind_).c;
                if (x <= 0.0) return 0.0;
                return 2.0 * normal_cdf(std::sqrt(x / c)) - 1.0;
            }
            default: {
                const auto& s = std::get<Empirical>(kind_).sorted;
                const auto it = std::upper_bound(s.begin(), s.end(), x);
                return static_cast<double>(it - s.begin()) / static_cast<double>(s.size());
            }
        }
    }

private:
    struct Normal {};
    struct ChiSq {
        double c;
    };
    struct Empirical {
        std::vector<double> sorted;
    };
    using Kind = std::variant<Normal, ChiSq, Empirical>;
    explicit ReferenceCdf(Kind k) : kind_(std::move(k)) {}
    Kind kind_;
};

} // namespace walkhull
