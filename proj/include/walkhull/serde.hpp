#pragma once

#include <string>

#include <json.hpp>

#include "walkhull/distribution.hpp"

namespace walkhull {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline void reject_unknown_keys(const ordered_json& obj, std::initializer_list<const char*> known,
                                const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw std::invalid_argument(where + ": unknown key \"" + key + "\"");
    }
}

inline Vec2 vec2_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument(where + ": expected [x, y]");
    const Vec2 v{j[0].get<double>(), j[1].get<double>()};
    if (!is_finite(v)) throw std::invalid_argument(where + ": coordinates must be finite");
    return v;
}

} // namespace detail

/// Tagged wire form: {"type": "finite"|"gaussian"|"lattice"|"degenerate_diag", ...}.
inline ordered_json distribution_to_json(const IncrementDistribution& dist) {
    ordered_json j;
    j["type"] = dist.type_name();
    if (const auto* f = dist.as_finite()) {
        ordered_json atoms = ordered_json::array();
        for (const auto& a : f->atoms) {
            ordered_json atom;
            atom["z"] = {a.z.x, a.z.y};
            atom["prob"] = a.prob;
            atoms.push_back(std::move(atom));
        }
        j["atoms"] = std::move(atoms);
    } else if (const auto* g = dist.as_gaussian()) {
        j["mu"] = {g->mu.x, g->mu.y};
        j["sd"] = g->sd;
    }
    return j;
}

inline IncrementDistribution distribution_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw std::invalid_argument("dist: expected an object with a \"type\" tag");
    const std::string type = j["type"].get<std::string>();
    if (type == "finite") {
        detail::reject_unknown_keys(j, {"type", "atoms"}, "dist(finite)");
        if (!j.contains("atoms") || !j["atoms"].is_array())
            throw std::invalid_argument("dist(finite): missing \"atoms\" array");
        std::vector<FiniteAtom> atoms;
        for (const auto& aj : j["atoms"]) {
            if (!aj.is_object()) throw std::invalid_argument("dist(finite): atom must be an object");
            detail::reject_unknown_keys(aj, {"z", "prob"}, "dist(finite) atom");
            if (!aj.contains("z") || !aj.contains("prob") || !aj["prob"].is_number())
                throw std::invalid_argument("dist(finite): atom needs \"z\" and numeric \"prob\"");
            atoms.push_back({detail::vec2_from_json(aj["z"], "dist(finite) atom z"),
                             aj["prob"].get<double>()});
        }
        return IncrementDistribution::finite(std::move(atoms));
    }
    if (type == "gaussian") {
        detail::reject_unknown_keys(j, {"type", "mu", "sd"}, "dist(gaussian)");
        if (!j.contains("mu") || !j.contains("sd") || !j["sd"].is_number())
            throw std::invalid_argument("dist(gaussian): needs \"mu\" and numeric \"sd\"");
        return IncrementDistribution::gaussian(detail::vec2_from_json(j["mu"], "dist(gaussian) mu"),
                                               j["sd"].get<double>());
    }
    if (type == "lattice") {
        detail::reject_unknown_keys(j, {"type"}, "dist(lattice)");
        return IncrementDistribution::lattice();
    }
    if (type == "degenerate_diag") {
        detail::reject_unknown_keys(j, {"type"}, "dist(degenerate_diag)");
        return IncrementDistribution::degenerate_diag();
    }
    throw std::invalid_argument("dist: unknown type \"" + type + "\"");
}

} // namespace walkhull
