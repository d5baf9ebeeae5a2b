// Command-line front end: list experiments, run one from a JSON config with
// dotted-path overrides, or dump a functional trace for plotting.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "walkhull/config.hpp"
#include "walkhull/report.hpp"

namespace fs = std::filesystem;
using namespace walkhull;

namespace {

int cmd_list() {
    std::printf("%-24s %s\n", "experiment", "checks");
    std::printf("%-24s %s\n", "----------", "------");
    for (const auto& info : experiment_registry())
        std::printf("%-24s %s\n", info.name.c_str(), info.summary.c_str());
    return 0;
}

void print_summary(const ExperimentResult& res) {
    std::printf("experiment %s (%.2f s)\n", res.name.c_str(), res.wall_seconds);
    std::printf("  %10s  %-34s %-24s %s\n", "n", "statistic", "value", "se");
    for (const auto& row : res.rows)
        std::printf("  %10lld  %-34s %-24s %s\n", static_cast<long long>(row.n),
                    row.statistic.c_str(), format_float(row.value).c_str(),
                    row.se ? format_float(*row.se).c_str() : "");
    for (const auto& a : res.assertions)
        std::printf("  [%s] %-32s %s\n", a.pass ? "PASS" : "FAIL", a.name.c_str(),
                    a.detail.c_str());
    std::printf("overall: %s\n", res.passed() ? "PASS" : "FAIL");
}

int cmd_run(const std::string& config_path, const std::vector<std::string>& overrides,
            const std::string& out_flag, int threads_flag, const std::string& format_flag) {
    ordered_json doc = load_json_file(config_path);
    for (const auto& kv : overrides) apply_override(doc, kv);
    RunConfig cfg = parse_run_config(doc);
    if (!out_flag.empty()) cfg.out_dir = out_flag;
    if (threads_flag >= 0) cfg.spec.threads = threads_flag;
    if (!format_flag.empty()) {
        cfg.formats.clear();
        std::size_t start = 0;
        while (start <= format_flag.size()) {
            const auto comma = format_flag.find(',', start);
            const std::string f = format_flag.substr(
                start, comma == std::string::npos ? comma : comma - start);
            if (f != "csv" && f != "json" && f != "gnuplot")
                throw std::invalid_argument("--format: expected csv, json or gnuplot, got \"" + f +
                                            "\"");
            cfg.formats.push_back(f);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }

    const ExperimentResult res = run_experiment(cfg.spec);

    fs::create_directories(cfg.out_dir);
    const fs::path dir(cfg.out_dir);
    for (const auto& f : cfg.formats) {
        if (f == "csv") write_text_file(dir / "result.csv", result_rows_csv(res));
        if (f == "json") write_text_file(dir / "result.json", result_to_json(res).dump(2) + "\n");
        if (f == "gnuplot") write_text_file(dir / "result.gp", result_gnuplot(res, "result.csv"));
    }
    print_summary(res);
    return res.passed() ? 0 : 2;
}

int cmd_trace(const std::string& dist_arg, std::int64_t n, std::uint64_t seed,
              std::uint64_t stream, const std::string& out_dir) {
    ordered_json dist_doc;
    if (!dist_arg.empty() && dist_arg.front() == '{') {
        dist_doc = parse_json_text(dist_arg, "--dist");
    } else {
        dist_doc = load_json_file(dist_arg);
    }
    const IncrementDistribution dist = distribution_from_json(dist_doc);
    const DriftStats st = dist.moments();
    const Path path = sample_path(dist, n, RandomStream(seed, stream));
    const FunctionalTrace tr = trace(path, default_checkpoints(n), st.mu_hat);

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    write_text_file(dir / "trace.csv", trace_csv(tr));
    write_text_file(dir / "trace.gp", trace_gnuplot("trace.csv"));
    const auto& last = tr.rows.back();
    std::printf("trace: %zu checkpoints to n=%lld; final L=%s D=%s r=%s\n", tr.rows.size(),
                static_cast<long long>(last.n), format_float(last.perimeter).c_str(),
                format_float(last.diameter).c_str(), format_float(last.inradius).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar random-walk convex hull laboratory"};
    app.require_subcommand(1);

    app.add_subcommand("list", "list registered experiments");

    auto* run = app.add_subcommand("run", "run an experiment from a JSON config");
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_flag;
    int threads_flag = -1;
    std::string format_flag;
    run->add_option("--config", config_path, "JSON config file")->required();
    run->add_option("--set", overrides, "dotted-path override, e.g. --set trials=100");
    run->add_option("--out", out_flag, "output directory (overrides config)");
    run->add_option("--threads", threads_flag, "worker threads (0 = hardware)");
    run->add_option("--format", format_flag, "comma list: csv,json,gnuplot");

    auto* tracecmd = app.add_subcommand("trace", "dump one trajectory's functional trace");
    std::string dist_arg = "{\"type\":\"lattice\"}";
    std::int64_t trace_n = 1024;
    std::uint64_t trace_seed = 1;
    std::uint64_t trace_stream = 0;
    std::string trace_out = ".";
    tracecmd->add_option("--dist", dist_arg, "distribution JSON (inline or a file path)");
    tracecmd->add_option("--n", trace_n, "number of steps")->required();
    tracecmd->add_option("--seed", trace_seed, "master seed");
    tracecmd->add_option("--stream", trace_stream, "stream id");
    tracecmd->add_option("--out", trace_out, "output directory");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("list")) return cmd_list();
        if (app.got_subcommand("run"))
            return cmd_run(config_path, overrides, out_flag, threads_flag, format_flag);
        return cmd_trace(dist_arg, trace_n, trace_seed, trace_stream, trace_out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
