#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "walkhull/experiment.hpp"
#include "walkhull/trace.hpp"

namespace walkhull {

constexpr const char* walkhull_version = "0.1.0";

/// Shortest-faithful float text at 17 significant digits; locale-free.
inline std::string format_float(double v) {
    char buf[40];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, ptr);
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

/// RFC-4180 rows: one line per (n, statistic), CRLF, 17-significant-digit
/// values, empty se field when not applicable.
inline std::string result_rows_csv(const ExperimentResult& res) {
    std::string out = "n,statistic,value,se\r\n";
    for (const auto& row : res.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += csv_field(row.statistic);
        out += ',';
        out += format_float(row.value);
        out += ',';
        if (row.se) out += format_float(*row.se);
        out += "\r\n";
    }
    return out;
}

inline ordered_json result_to_json(const ExperimentResult& res) {
    ordered_json j;
    j["experiment"] = res.name;
    j["passed"] = res.passed();
    j["config"] = res.resolved_config;
    ordered_json rows = ordered_json::array();
    for (const auto& row : res.rows) {
        ordered_json r;
        r["n"] = row.n;
        r["statistic"] = row.statistic;
        r["value"] = row.value;
        if (row.se) r["se"] = *row.se;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    ordered_json asserts = ordered_json::array();
    for (const auto& a : res.assertions) {
        ordered_json aj;
        aj["name"] = a.name;
        aj["pass"] = a.pass;
        aj["detail"] = a.detail;
        asserts.push_back(std::move(aj));
    }
    j["assertions"] = std::move(asserts);
    j["meta"] = {{"version", walkhull_version}, {"wall_seconds", res.wall_seconds}};
    return j;
}

inline std::string result_gnuplot(const ExperimentResult& res, const std::string& csv_name) {
    std::vector<std::string> stats;
    for (const auto& row : res.rows)
        if (std::find(stats.begin(), stats.end(), row.statistic) == stats.end())
            stats.push_back(row.statistic);
    std::string gp;
    gp += "# gnuplot script for " + res.name + "\n";
    gp += "set datafile separator comma\n";
    gp += "set logscale x\n";
    gp += "set xlabel 'n'\n";
    gp += "set key outside\n";
    gp += "set term pngcairo size 1000,640\n";
    gp += "set output '" + res.name + ".png'\n";
    gp += "plot \\\n";
    for (std::size_t i = 0; i < stats.size(); ++i) {
        gp += "  '" + csv_name + "' every ::1 using 1:(strcol(2) eq \"" + stats[i] +
              "\" ? $3 : NaN) with linespoints title '" + stats[i] + "'";
        gp += i + 1 < stats.size() ? ", \\\n" : "\n";
    }
    return gp;
}

inline std::string trace_csv(const FunctionalTrace& tr) {
    std::string out = "n,L,D,r,s_norm,x_proj,ratio\r\n";
    for (const auto& row : tr.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += format_float(row.perimeter);
        out += ',';
        out += format_float(row.diameter);
        out += ',';
        out += format_float(row.inradius);
        out += ',';
        out += format_float(row.s_norm);
        out += ',';
        if (row.x_proj) out += format_float(*row.x_proj);
        out += ',';
        if (row.ratio) out += format_float(*row.ratio);
        out += "\r\n";
    }
    return out;
}

inline std::string trace_gnuplot(const std::string& csv_name) {
    std::string gp;
    gp += "set datafile separator comma\n";
    gp += "set logscale x\n";
    gp += "set xlabel 'n'\n";
    gp += "set term pngcairo size 1000,640\n";
    gp += "set output 'trace.png'\n";
    gp += "set multiplot layout 2,1\n";
    gp += "set ylabel 'L/D'\n";
    gp += "plot '" + csv_name + "' every ::1 using 1:7 with lines title 'perimeter/diameter'\n";
    gp += "set ylabel 'length'\n";
    gp += "plot '" + csv_name + "' every ::1 using 1:2 with lines title 'L', \\\n";
    gp += "     '" + csv_name + "' every ::1 using 1:3 with lines title 'D', \\\n";
    gp += "     '" + csv_name + "' every ::1 using 1:4 with lines title 'r'\n";
    gp += "unset multiplot\n";
    return gp;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

} // namespace walkhull
