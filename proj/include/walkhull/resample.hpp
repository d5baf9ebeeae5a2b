#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "walkhull/calipers.hpp"
#include "walkhull/path.hpp"
#include "walkhull/summary.hpp"

namespace walkhull {

/// Output of the resample-one-increment variance construction. var_identity
/// estimates sum_i E(Delta_{n,i}^2), which equals Var D_n exactly; var_direct
/// is the plain sample variance of D_n over the same trials.
struct ResampleResult {
    std::int64_t n = 0;
    std::int64_t trials = 0;
    std::int64_t inner = 0;
    double var_direct = 0.0;
    double var_direct_se = 0.0;
    double var_identity = 0.0;
    double var_identity_se = 0.0;
    double max_bound_slack = 0.0; // max over samples of |D_n - D_n^(i)| - (2||Z_i|| + 2||Z_i'||)
    bool bound_ok = true;         // the slack never exceeded 0 (up to fp dust)
};

namespace detail {

// Diameter of the walk with increment i replaced: S_j for j < i, then the
// suffix shifted by (replacement - Z_i). `scratch` holds n+1 points.
inline double replaced_diameter(const std::vector<Vec2>& positions, std::size_t i, Vec2 original,
                                Vec2 replacement, std::vector<Vec2>& scratch) {
    const Vec2 shift = replacement - original;
    for (std::size_t j = 0; j < i; ++j) scratch[j] = positions[j];
    for (std::size_t j = i; j < positions.size(); ++j) scratch[j] = positions[j] + shift;
    return diameter(convex_hull(scratch)).value;
}

} // namespace detail

/// Monte Carlo check of Var D_n = sum_i E(Delta_{n,i}^2), with
/// Delta_{n,i} = E(D_n - D_n^(i) | F_i).
///
/// E(Delta^2) is estimated as a product of two estimates of Delta_{n,i} that
/// are independent given F_i: factor A averages D_n - D_n^(i) over `inner`
/// replacement draws on the realized path; factor B does the same on a path
/// whose increments after i are regenerated. Their product has expectation
/// exactly E(Delta_{n,i}^2), for any inner count. (Averaging over replacements
/// alone, however corrected, estimates a conditional expectation given the
/// realized future and overshoots the identity; the two-factor form is why
/// this check can run at 4-standard-error tightness.)
///
/// Replacement draws for factor A are shared across i within a trial; factor B
/// consumes, per i, first the n - i future increments and then its `inner`
/// replacements, from a dedicated stream.
inline ResampleResult resample_deltas(const IncrementDistribution& dist, std::int64_t n,
                                      std::int64_t trials, std::int64_t inner,
                                      std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("resample_deltas: n must be >= 1");
    if (trials < 1) throw std::invalid_argument("resample_deltas: trials must be >= 1");
    if (inner < 1) throw std::invalid_argument("resample_deltas: inner must be >= 1");

    const auto un = static_cast<std::size_t>(n);
    std::vector<Vec2> increments(un);
    std::vector<Vec2> positions(un + 1);
    std::vector<Vec2> positions_b(un + 1);
    std::vector<Vec2> replacements_a(static_cast<std::size_t>(inner));
    std::vector<Vec2> scratch(un + 1);

    std::vector<double> dn_samples;
    dn_samples.reserve(static_cast<std::size_t>(trials));
    std::vector<double> identity_samples;
    identity_samples.reserve(static_cast<std::size_t>(trials));
    double max_slack = -std::numeric_limits<double>::infinity();

    for (std::int64_t t = 0; t < trials; ++t) {
        RandomStream path_rng(seed, stream_ns::path + static_cast<std::uint64_t>(t));
        positions[0] = {0.0, 0.0};
        for (std::size_t k = 0; k < un; ++k) {
            increments[k] = dist.sample(path_rng);
            positions[k + 1] = positions[k] + increments[k];
        }
        const double d_n = diameter(convex_hull(positions)).value;
        dn_samples.push_back(d_n);

        RandomStream rng_a(seed, stream_ns::resample + static_cast<std::uint64_t>(t));
        for (auto& z : replacements_a) z = dist.sample(rng_a);
        RandomStream rng_b(seed, stream_ns::aux + static_cast<std::uint64_t>(t));

        double identity = 0.0;
        for (std::size_t i = 1; i <= un; ++i) {
            const Vec2 zi = increments[i - 1];

            double mean_a = 0.0;
            for (const Vec2 zrep : replacements_a) {
                const double delta = d_n - detail::replaced_diameter(positions, i, zi, zrep, scratch);
                mean_a += delta;
                max_slack = std::max(max_slack, std::abs(delta) - 2.0 * (zi.norm() + zrep.norm()));
            }
            mean_a /= static_cast<double>(inner);

            // factor B: same prefix and Z_i, fresh increments beyond i
            for (std::size_t j = 0; j < i; ++j) positions_b[j] = positions[j];
            positions_b[i] = positions_b[i - 1] + zi;
            for (std::size_t j = i + 1; j <= un; ++j)
                positions_b[j] = positions_b[j - 1] + dist.sample(rng_b);
            const double d_b = diameter(convex_hull(positions_b)).value;

            double mean_b = 0.0;
            for (std::int64_t r = 0; r < inner; ++r) {
                const Vec2 zrep = dist.sample(rng_b);
                const double delta = d_b - detail::replaced_diameter(positions_b, i, zi, zrep, scratch);
                mean_b += delta;
                max_slack = std::max(max_slack, std::abs(delta) - 2.0 * (zi.norm() + zrep.norm()));
            }
            mean_b /= static_cast<double>(inner);

            identity += mean_a * mean_b;
        }
        identity_samples.push_back(identity);
    }

    ResampleResult out;
    out.n = n;
    out.trials = trials;
    out.inner = inner;
    if (trials > 1) {
        const auto direct = summarize(dn_samples);
        out.var_direct = direct.variance();
        out.var_direct_se = trials > 3 ? variance_std_error(dn_samples) : 0.0;
        const auto ident = summarize(identity_samples);
        out.var_identity = ident.mean();
        out.var_identity_se = ident.std_error();
    }
    out.max_bound_slack = max_slack;
    out.bound_ok = max_slack <= 1e-9;
    return out;
}

} // namespace walkhull
