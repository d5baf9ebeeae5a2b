#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "walkhull/path.hpp"
#include "walkhull/summary.hpp"

namespace walkhull {

struct SpitzerWidomPoint {
    std::int64_t k = 0;
    double estimate = 0.0; // cumulative 2 * sum_{j<=k} mean||S_j|| / j
    double std_error = 0.0;
};

/// Mean-perimeter estimator from the identity E L_n = 2 sum_{k<=n} E||S_k||/k.
/// All partial sums for one trial come from the same trajectory, so estimates
/// across the checkpoint grid share their sampling noise.
inline std::vector<SpitzerWidomPoint> spitzer_widom_mean(const IncrementDistribution& dist,
                                                         std::int64_t n, std::int64_t trials,
                                                         std::uint64_t seed,
                                                         std::vector<std::int64_t> checkpoints = {}) {
    if (n < 0) throw std::invalid_argument("spitzer_widom_mean: n must be >= 0");
    if (trials < 1) throw std::invalid_argument("spitzer_widom_mean: trials must be >= 1");
    if (n == 0) return {};
    if (checkpoints.empty()) {
        for (std::int64_t k = 1; k <= n; k *= 2) checkpoints.push_back(k);
        if (checkpoints.back() != n) checkpoints.push_back(n);
    }
    for (std::size_t i = 0; i < checkpoints.size(); ++i)
        if (checkpoints[i] < 1 || checkpoints[i] > n ||
            (i > 0 && checkpoints[i] <= checkpoints[i - 1]))
            throw std::invalid_argument("spitzer_widom_mean: bad checkpoint grid");

    std::vector<SampleSummary> acc(checkpoints.size());
    for (std::int64_t t = 0; t < trials; ++t) {
        RandomStream rng(seed, static_cast<std::uint64_t>(t));
        Vec2 pos{0.0, 0.0};
        double partial = 0.0;
        std::size_t next = 0;
        for (std::int64_t k = 1; k <= n && next < checkpoints.size(); ++k) {
            pos += dist.sample(rng);
            partial += pos.norm() / static_cast<double>(k);
            if (checkpoints[next] == k) {
                acc[next].add(2.0 * partial);
                ++next;
            }
        }
    }

    std::vector<SpitzerWidomPoint> out(checkpoints.size());
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        out[i].k = checkpoints[i];
        out[i].estimate = acc[i].mean();
        out[i].std_error = trials > 1 ? acc[i].std_error() : 0.0;
    }
    return out;
}

} // namespace walkhull
