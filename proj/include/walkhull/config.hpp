#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "walkhull/registry.hpp"
#include "walkhull/serde.hpp"

namespace walkhull {

/// One experiment run as described by a JSON config document. Fields not
/// present fall back to the experiment's default spec; unknown keys anywhere
/// are rejected.
struct RunConfig {
    ExperimentSpec spec;
    std::string out_dir = ".";
    std::vector<std::string> formats = {"csv", "json"};
};

namespace detail {

inline std::int64_t int_field(const ordered_json& j, const std::string& where) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw std::invalid_argument(where + ": expected an integer");
    return j.get<std::int64_t>();
}

inline std::uint64_t uint_field(const ordered_json& j, const std::string& where) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(j.get<std::int64_t>());
    throw std::invalid_argument(where + ": expected a non-negative integer");
}

} // namespace detail

inline RunConfig parse_run_config(const ordered_json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("config: top level must be an object");
    detail::reject_unknown_keys(doc,
                                {"experiment", "dist", "n_grid", "trials", "seed", "threads",
                                 "inner", "grids", "segment_theta", "witness_beta", "thresholds",
                                 "output"},
                                "config");
    if (!doc.contains("experiment") || !doc["experiment"].is_string())
        throw std::invalid_argument("config: missing string field \"experiment\"");

    RunConfig cfg;
    cfg.spec = default_spec(doc["experiment"].get<std::string>());

    if (doc.contains("dist")) cfg.spec.dist = distribution_from_json(doc["dist"]);
    if (doc.contains("n_grid")) {
        if (!doc["n_grid"].is_array() || doc["n_grid"].empty())
            throw std::invalid_argument("config.n_grid: expected a non-empty array");
        cfg.spec.n_grid.clear();
        for (const auto& v : doc["n_grid"])
            cfg.spec.n_grid.push_back(detail::int_field(v, "config.n_grid entry"));
    }
    if (doc.contains("trials")) cfg.spec.trials = detail::int_field(doc["trials"], "config.trials");
    if (doc.contains("seed")) cfg.spec.seed = detail::uint_field(doc["seed"], "config.seed");
    if (doc.contains("threads"))
        cfg.spec.threads = static_cast<int>(detail::int_field(doc["threads"], "config.threads"));
    if (doc.contains("inner")) cfg.spec.inner = detail::int_field(doc["inner"], "config.inner");
    if (doc.contains("grids")) {
        const auto& g = doc["grids"];
        detail::reject_unknown_keys(g, {"hausdorff_m", "cauchy_m", "projection_m"}, "config.grids");
        auto grid_field = [&](const char* key, std::size_t& out) {
            if (!g.contains(key)) return;
            const std::int64_t v = detail::int_field(g[key], std::string("config.grids.") + key);
            if (v < 4) throw std::invalid_argument(std::string("config.grids.") + key + ": need >= 4");
            out = static_cast<std::size_t>(v);
        };
        grid_field("hausdorff_m", cfg.spec.hausdorff_m);
        grid_field("cauchy_m", cfg.spec.cauchy_m);
        grid_field("projection_m", cfg.spec.projection_m);
    }
    if (doc.contains("segment_theta")) {
        if (!doc["segment_theta"].is_number())
            throw std::invalid_argument("config.segment_theta: expected a number");
        cfg.spec.segment_theta = doc["segment_theta"].get<double>();
    }
    if (doc.contains("witness_beta")) {
        if (!doc["witness_beta"].is_number())
            throw std::invalid_argument("config.witness_beta: expected a number");
        cfg.spec.witness_beta = doc["witness_beta"].get<double>();
    }
    if (doc.contains("thresholds")) {
        if (!doc["thresholds"].is_object())
            throw std::invalid_argument("config.thresholds: expected an object");
        for (const auto& [key, value] : doc["thresholds"].items()) {
            if (cfg.spec.thresholds.find(key) == cfg.spec.thresholds.end())
                throw std::invalid_argument("config.thresholds: unknown threshold \"" + key +
                                            "\" for " + cfg.spec.experiment);
            if (!value.is_number())
                throw std::invalid_argument("config.thresholds." + key + ": expected a number");
            cfg.spec.thresholds[key] = value.get<double>();
        }
    }
    if (doc.contains("output")) {
        const auto& o = doc["output"];
        detail::reject_unknown_keys(o, {"dir", "formats"}, "config.output");
        if (o.contains("dir")) {
            if (!o["dir"].is_string())
                throw std::invalid_argument("config.output.dir: expected a string");
            cfg.out_dir = o["dir"].get<std::string>();
        }
        if (o.contains("formats")) {
            if (!o["formats"].is_array())
                throw std::invalid_argument("config.output.formats: expected an array");
            cfg.formats.clear();
            for (const auto& f : o["formats"]) {
                const std::string name = f.is_string() ? f.get<std::string>() : "";
                if (name != "csv" && name != "json" && name != "gnuplot")
                    throw std::invalid_argument(
                        "config.output.formats: expected csv, json or gnuplot");
                cfg.formats.push_back(name);
            }
        }
    }
    cfg.spec.validate();
    return cfg;
}

/// Parses a JSON document; parse errors carry the byte offset and line number.
inline ordered_json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + e.what());
    }
}

inline ordered_json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read config file " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json_text(text, path.string());
}

/// Applies one `--set key.path=value` override to a JSON document. The value
/// is parsed as JSON when possible, otherwise taken as a string.
inline void apply_override(ordered_json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("--set expects key.path=value, got \"" + assignment + "\"");
    const std::string path = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);
    ordered_json value;
    try {
        value = ordered_json::parse(raw);
    } catch (const nlohmann::json::parse_error&) {
        value = raw;
    }
    ordered_json* node = &doc;
    std::size_t start = 0;
    for (;;) {
        const auto dot = path.find('.', start);
        const std::string key = path.substr(start, dot == std::string::npos ? dot : dot - start);
        if (key.empty()) throw std::invalid_argument("--set: empty key segment in \"" + path + "\"");
        if (dot == std::string::npos) {
            (*node)[key] = value;
            return;
        }
        node = &(*node)[key];
        start = dot + 1;
    }
}

} // namespace walkhull
