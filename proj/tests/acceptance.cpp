// Acceptance suite: ten numbered criteria, each printed as one PASS/FAIL line.
// Usage: acceptance [criterion...]   (no arguments = run all ten)

#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "walkhull/registry.hpp"
#include "walkhull/projections.hpp"
#include "walkhull/report.hpp"

using namespace walkhull;

namespace {

constexpr double pi = 3.14159265358979323846;

struct Check {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

void summarize_experiment(Check& c, const ExperimentResult& res) {
    for (const auto& a : res.assertions)
        c.require(a.pass, res.name + "." + a.name + " [" + a.detail + "]");
}

// --- criterion 1: geometry oracle suite --------------------------------------

bool criterion_geometry(std::string& detail) {
    Check c;
    RandomStream rng(424242, 0);
    const DirectionGrid cauchy_grid = DirectionGrid::full(8192);
    const DirectionGrid proj_grid = DirectionGrid::half(8192);
    const DirectionGrid haus_grid = DirectionGrid::full(4096);

    const int sets = 10000;
    for (int rep = 0; rep < sets && c.pass; ++rep) {
        const std::size_t count = 2 + rng.next_u64() % 63;
        const bool lattice = rep % 5 == 0;
        const auto pts = lattice ? testutil::random_lattice_points(rng, count, 6)
                                 : testutil::random_points(rng, count, -1.0, 1.0);

        const ConvexPolygon hull = convex_hull(pts);
        auto mine = hull.vertices();
        std::sort(mine.begin(), mine.end(), lex_less);
        c.require(mine == testutil::hull_vertices_oracle(pts),
                  "hull != half-plane oracle at rep " + std::to_string(rep));

        const double diam = diameter(hull).value;
        const double brute = testutil::all_pairs_diameter(pts);
        c.require(std::abs(diam - brute) <= 1e-12 * std::max(1.0, brute),
                  "diameter != all-pairs at rep " + std::to_string(rep));

        double radius = 0.0;
        for (Vec2 p : pts) radius = std::max(radius, p.norm());
        const double cper = cauchy_perimeter(pts, cauchy_grid);
        c.require(std::abs(cper - perimeter(hull)) <= cauchy_grid_bound(radius, cauchy_grid),
                  "cauchy outside bound at rep " + std::to_string(rep));

        const double dproj = diameter_via_projections(pts, proj_grid);
        c.require(dproj <= diam + 1e-12, "projection diameter exceeds exact");
        c.require(diam - dproj <= projection_grid_bound(diam, proj_grid),
                  "projection diameter outside bound at rep " + std::to_string(rep));
    }

    // continuity inequalities on random polygon pairs; the rescaling bound
    // needs origin-containing sets (the class the walk hulls live in), so the
    // origin joins every generated set
    for (int rep = 0; rep < sets && c.pass; ++rep) {
        auto pts1 = testutil::random_points(rng, 3 + rng.next_u64() % 30, -1, 1);
        auto pts2 = testutil::random_points(rng, 3 + rng.next_u64() % 30, -1, 1);
        pts1.push_back({0, 0});
        pts2.push_back({0, 0});
        const auto k1 = convex_hull(pts1);
        const auto k2 = convex_hull(pts2);
        const auto h = hausdorff(k1, k2, haus_grid);
        c.require(std::abs(diameter(k1).value - diameter(k2).value) <= 2 * h.upper() + 1e-9,
                  "diameter continuity violated at rep " + std::to_string(rep));
        c.require(std::abs(perimeter(k1) - perimeter(k2)) <= 2 * pi * h.upper() + 1e-9,
                  "perimeter continuity violated at rep " + std::to_string(rep));
        const double d1 = diameter(k1).value;
        if (d1 > 0 && diameter(k2).value > 0) {
            const auto lhs = hausdorff(scale_unit_diameter(k1), scale_unit_diameter(k2), haus_grid);
            c.require(lhs.value <= 3.0 * h.upper() / d1 + 1e-9,
                      "rescaling continuity violated at rep " + std::to_string(rep));
        }
    }

    // projection Lipschitz property
    for (int rep = 0; rep < sets && c.pass; ++rep) {
        const Vec2 x{6 * rng.next_unit() - 3, 6 * rng.next_unit() - 3};
        const double t1 = 10 * rng.next_unit() - 5;
        const double t2 = 10 * rng.next_unit() - 5;
        c.require(std::abs(dot(x, unit_vector(t1)) - dot(x, unit_vector(t2))) <=
                      x.norm() * std::abs(t1 - t2) + 1e-12,
                  "projection Lipschitz violated at rep " + std::to_string(rep));
    }

    detail = c.pass ? "1e4 sets: hull/diameter exact, grid estimators within bounds, "
                      "continuity inequalities hold"
                    : c.detail;
    return c.pass;
}

// --- criteria 2..8: experiment-backed -----------------------------------------

bool criterion_degenerate(std::string& detail) {
    Check c;
    const auto res = run_experiment(default_spec("exp_degenerate"));
    summarize_experiment(c, res);
    std::string nums;
    for (const auto& row : res.rows)
        if (row.n == 4096 && (row.statistic == "mean_D_minus_mu_n" || row.statistic == "var_D" ||
                              row.statistic == "ks_vs_scaled_chisq"))
            nums += row.statistic + "=" + detail::fmt(row.value) + " ";
    detail = c.pass ? nums + "(targets 0.5 / 0.5 / <0.02, KS decreasing)" : c.detail;
    return c.pass;
}

bool criterion_norm_gap(std::string& detail) {
    Check c;
    const auto res = run_experiment(default_spec("exp_mean_norm_gap"));
    summarize_experiment(c, res);
    std::string nums;
    for (const auto& row : res.rows)
        if (row.statistic == "mean_norm_gap" && row.n == 4096)
            nums = "gap(4096)=" + detail::fmt(row.value);
    detail = c.pass ? nums + " in [0.46, 0.54], nonnegative at every n" : c.detail;
    return c.pass;
}

bool criterion_mean_perimeter(std::string& detail) {
    Check c;
    const auto res = run_experiment(default_spec("exp_mean_perimeter"));
    summarize_experiment(c, res);
    std::string nums = "log-coefficient:";
    for (const auto& row : res.rows)
        if (row.statistic == "log_coefficient") nums += " " + detail::fmt(row.value);
    detail = c.pass ? nums + " (target 1, window 0.8..1.2, monotone approach)" : c.detail;
    return c.pass;
}

bool criterion_clt(std::string& detail) {
    Check c;
    const auto res = run_experiment(default_spec("exp_clt_diameter"));
    summarize_experiment(c, res);
    std::string nums;
    for (const auto& row : res.rows) {
        if (row.statistic == "var_D_over_n" && row.n == 16384)
            nums += "var/n=" + detail::fmt(row.value) + " ";
        if (row.statistic == "ks_studentized_normal" && row.n == 16384)
            nums += "ks=" + detail::fmt(row.value);
    }
    detail = c.pass ? nums + " (var/n in [0.9,1.1], ks < 0.02 decreasing)" : c.detail;
    return c.pass;
}

bool criterion_ratio(std::string& detail) {
    Check c;
    const auto res = run_experiment(default_spec("exp_ratio_drift"));
    summarize_experiment(c, res);
    std::string nums;
    for (const auto& row : res.rows)
        if (row.statistic == "fraction_in_window" || row.statistic == "min_ratio")
            nums += row.statistic + "=" + detail::fmt(row.value) + " ";
    detail = c.pass ? nums + "(need >= 0.95 in [2, 2.05], min >= 2 - 1e-9)" : c.detail;
    return c.pass;
}

bool criterion_shape(std::string& detail) {
    Check c;
    const auto res = run_experiment(default_spec("exp_shape_zero_drift"));
    summarize_experiment(c, res);
    std::string nums;
    for (const auto& row : res.rows)
        if (row.statistic == "fraction_runmin_ratio_le_threshold" ||
            row.statistic == "fraction_runmax_ratio_ge_threshold")
            nums += row.statistic + "=" + detail::fmt(row.value) + " ";
    detail = c.pass ? nums + "(both >= 0.9; running-min distances decreasing)" : c.detail;
    return c.pass;
}

bool criterion_variance_identity(std::string& detail) {
    Check c;
    ExperimentSpec degen = default_spec("exp_variance_identity");
    degen.dist = IncrementDistribution::degenerate_diag();
    degen.n_grid = {10};
    degen.trials = 4000;
    degen.inner = 16;
    const auto rd = run_experiment(degen);
    summarize_experiment(c, rd);

    const auto rg = run_experiment(default_spec("exp_variance_identity"));
    summarize_experiment(c, rg);

    std::string nums;
    for (const auto& row : rg.rows)
        if (row.statistic == "var_direct" || row.statistic == "var_identity")
            nums += row.statistic + "=" + detail::fmt(row.value) + " ";
    detail = c.pass ? "degenerate n=10 matches enumeration; gaussian n=32: " + nums : c.detail;
    return c.pass;
}

// --- criterion 9: Spitzer-Widom consistency -----------------------------------

bool criterion_spitzer_widom(std::string& detail) {
    Check c;
    const std::int64_t n = 256;
    const std::int64_t trials = 20000;
    std::string nums;
    const IncrementDistribution dists[2] = {IncrementDistribution::degenerate_diag(),
                                            IncrementDistribution::gaussian({1, 0}, 1.0)};
    for (const auto& dist : dists) {
        const auto sw = spitzer_widom_mean(dist, n, trials, 777001, {n});
        ExperimentSpec tmp = default_spec("exp_lln");
        tmp.dist = dist;
        tmp.n_grid = {n};
        tmp.trials = trials;
        tmp.seed = 777002;
        SampleSummary direct;
        detail::hull_trial_loop(tmp, dist.moments(),
                                [&](std::int64_t, std::size_t, const CheckpointRow& row) {
                                    direct.add(row.perimeter);
                                });
        const double comb = std::sqrt(sw[0].std_error * sw[0].std_error +
                                      direct.std_error() * direct.std_error());
        const double diff = std::abs(sw[0].estimate - direct.mean());
        c.require(diff <= 3.0 * comb, dist.type_name() + ": |sw - direct| = " +
                                          detail::fmt(diff) + " > 3 * " + detail::fmt(comb));
        nums += dist.type_name() + ": sw=" + detail::fmt(sw[0].estimate) +
                " direct=" + detail::fmt(direct.mean()) + "  ";
    }

    const auto one = spitzer_widom_mean(IncrementDistribution::degenerate_diag(), 1, 4000, 777003);
    const double exact = 2.0 * std::sqrt(2.0);
    c.require(std::abs(one[0].estimate - exact) <= std::max(3.0 * one[0].std_error, 1e-12),
              "n=1 estimate " + detail::fmt(one[0].estimate) + " != 2*sqrt(2)");

    detail = c.pass ? nums + "n=1 exact 2*sqrt(2)" : c.detail;
    return c.pass;
}

// --- criterion 10: reproducibility --------------------------------------------

bool criterion_reproducibility(std::string& detail) {
    Check c;
    for (const char* name : {"exp_degenerate", "exp_clt_diameter"}) {
        const auto spec = default_spec(name);
        const auto r1 = run_experiment(spec);
        const auto r2 = run_experiment(spec);
        c.require(result_rows_csv(r1) == result_rows_csv(r2),
                  std::string(name) + ": CSV outputs differ between identical runs");
    }
    detail = c.pass ? "criteria 2 and 5 re-runs are byte-identical" : c.detail;
    return c.pass;
}

struct Criterion {
    int id;
    const char* title;
    bool (*run)(std::string&);
};

const Criterion criteria[] = {
    {1, "geometry oracle suite", &criterion_geometry},
    {2, "degenerate diameter limits", &criterion_degenerate},
    {3, "mean norm gap", &criterion_norm_gap},
    {4, "mean perimeter expansion", &criterion_mean_perimeter},
    {5, "diameter CLT", &criterion_clt},
    {6, "drift ratio", &criterion_ratio},
    {7, "zero-drift shape", &criterion_shape},
    {8, "variance identity", &criterion_variance_identity},
    {9, "Spitzer-Widom consistency", &criterion_spitzer_widom},
    {10, "reproducibility", &criterion_reproducibility},
};

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    bool all_pass = true;
    for (const auto& crit : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), crit.id) == selected.end())
            continue;
        std::string detail;
        bool pass = false;
        try {
            pass = crit.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", crit.id, crit.title,
                    detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && pass;
    }
    return all_pass ? 0 : 1;
}
