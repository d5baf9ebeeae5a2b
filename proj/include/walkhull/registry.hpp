#pragma once

#include <chrono>

#include "walkhull/runners.hpp"

namespace walkhull {

struct ExperimentInfo {
    std::string name;
    std::string summary;
    ExperimentResult (*run)(const ExperimentSpec&);
};

inline const std::vector<ExperimentInfo>& experiment_registry() {
    static const std::vector<ExperimentInfo> registry = {
        {"exp_lln", "strong-law scaling of L_n/n and D_n/n (2|mu| and |mu|, or 0 without drift)",
         &run_exp_lln},
        {"exp_ratio_drift", "perimeter/diameter ratio tends to 2 under drift; lower bound 2 always",
         &run_exp_ratio_drift},
        {"exp_shape_zero_drift",
         "zero drift: rescaled hull revisits segment/disc/square shapes; L/D sweeps [2, pi]",
         &run_exp_shape_zero_drift},
        {"exp_mean_perimeter", "mean perimeter log-order correction under drift, with identity "
                               "cross-check",
         &run_exp_mean_perimeter},
        {"exp_mean_norm_gap", "E||S_n|| - |mu| n gap: nonnegative, tends to sigma_perp^2/(2|mu|)",
         &run_exp_mean_norm_gap},
        {"exp_l2_recast", "L2 collapse of L_n - 2 S_n.mu and D_n - S_n.mu at scale sqrt(n)",
         &run_exp_l2_recast},
        {"exp_clt_diameter", "Var D_n / n tends to sigma_mu^2; studentized D_n is asymptotically "
                             "normal",
         &run_exp_clt_diameter},
        {"exp_degenerate", "degenerate drift: D_n - |mu| n has a scaled chi-square(1) limit; "
                           "diameter attained near the ends",
         &run_exp_degenerate},
        {"exp_inradius", "origin inradius grows for recurrent planar walks, stays bounded under "
                         "drift",
         &run_exp_inradius},
        {"exp_variance_identity", "Var D_n equals the summed squared resampling differences",
         &run_exp_variance_identity},
        {"exp_conjecture", "exploratory: Var L_n / log n levels (positivity only)",
         &run_exp_conjecture},
    };
    return registry;
}

inline const ExperimentInfo& find_experiment(const std::string& name) {
    for (const auto& info : experiment_registry())
        if (info.name == name) return info;
    throw std::invalid_argument("unknown experiment \"" + name + "\"");
}

/// Canonical spec per experiment: the acceptance-run distribution, grid,
/// trial count and calibrated thresholds. Config files start from these and
/// may override any field.
inline ExperimentSpec default_spec(const std::string& name) {
    ExperimentSpec s;
    s.experiment = name;
    if (name == "exp_lln") {
        s.dist = IncrementDistribution::gaussian({1, 0}, 1.0);
        s.n_grid = {1000, 10000, 100000};
        s.trials = 20;
        s.seed = 90101;
        s.thresholds = {{"lln_window_L", 0.05}, {"lln_window_D", 0.03},
                        {"lln_zero_drift_max", 0.05}};
    } else if (name == "exp_ratio_drift") {
        s.dist = IncrementDistribution::gaussian({1, 0}, 1.0);
        s.n_grid = {1000, 10000, 100000};
        s.trials = 100;
        s.seed = 90102;
        s.thresholds = {{"ratio_upper_tol", 0.05}, {"ratio_fraction", 0.95}};
    } else if (name == "exp_shape_zero_drift") {
        s.dist = IncrementDistribution::lattice();
        s.n_grid = {10000, 100000, 1000000};
        s.trials = 50;
        s.seed = 90103;
        s.thresholds = {{"shape_min_n", 1024},
                        {"shape_dist_per_doubling", 4},
                        {"ratio_min_threshold", 2.35},
                        {"ratio_max_threshold", 2.6},
                        {"ratio_fraction", 0.90},
                        {"dip_segment", 0.33},
                        {"dip_disc", 0.26},
                        {"dip_square", 0.32}};
    } else if (name == "exp_mean_perimeter") {
        s.dist = IncrementDistribution::degenerate_diag();
        s.n_grid = {4096, 16384, 65536};
        s.trials = 10000;
        s.seed = 90104;
        s.thresholds = {{"mean_perimeter_window", 0.20},
                        {"sw_check_n", 256},
                        {"sw_check_trials", 20000}};
    } else if (name == "exp_mean_norm_gap") {
        s.dist = IncrementDistribution::degenerate_diag();
        s.n_grid = {256, 1024, 4096};
        s.trials = 200000;
        s.seed = 90105;
        s.thresholds = {{"norm_gap_window", 0.04}};
    } else if (name == "exp_l2_recast") {
        s.dist = IncrementDistribution::gaussian({1, 0}, 1.0);
        s.n_grid = {256, 1024, 4096, 16384};
        s.trials = 4000;
        s.seed = 90106;
        s.thresholds = {{"l2_threshold_L", 0.02}, {"l2_threshold_D", 0.0005}};
    } else if (name == "exp_clt_diameter") {
        s.dist = IncrementDistribution::gaussian({1, 0}, 1.0);
        s.n_grid = {256, 1024, 4096, 16384};
        s.trials = 20000;
        s.seed = 90107;
        s.thresholds = {{"clt_var_window", 0.10}, {"clt_ks_max", 0.02}};
    } else if (name == "exp_degenerate") {
        s.dist = IncrementDistribution::degenerate_diag();
        s.n_grid = {256, 1024, 4096};
        s.trials = 200000;
        s.seed = 90108;
        s.thresholds = {{"degenerate_mean_window", 0.02},
                        {"degenerate_var_window", 0.05},
                        {"degenerate_ks_max", 0.02},
                        {"witness_fraction", 0.99}};
    } else if (name == "exp_inradius") {
        s.dist = IncrementDistribution::lattice();
        s.n_grid = {10000, 100000, 1000000};
        s.trials = 20;
        s.seed = 90109;
        s.thresholds = {{"inradius_median_min", 1.0}, {"inradius_drift_bound", 10.0}};
    } else if (name == "exp_variance_identity") {
        s.dist = IncrementDistribution::gaussian({1, 0}, 1.0);
        s.n_grid = {32};
        s.trials = 2000;
        s.inner = 64;
        s.seed = 90110;
        s.thresholds = {{"identity_se_mult", 4.0}};
    } else if (name == "exp_conjecture") {
        s.dist = IncrementDistribution::degenerate_diag();
        s.n_grid = {1024, 4096, 16384};
        s.trials = 20000;
        s.seed = 90111;
        s.thresholds = {};
    } else {
        throw std::invalid_argument("unknown experiment \"" + name + "\"");
    }
    return s;
}

inline ExperimentResult run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    const auto& info = find_experiment(spec.experiment);
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentResult res = info.run(spec);
    const auto t1 = std::chrono::steady_clock::now();
    res.name = spec.experiment;
    res.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    res.resolved_config = spec_to_json(spec);
    return res;
}

} // namespace walkhull
