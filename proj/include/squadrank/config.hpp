#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "squadrank/domain.hpp"
#include "squadrank/rating.hpp"
#include "squadrank/selection.hpp"

namespace squadrank {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Rating configuration document
//
// {
//   "weights": { "opener_average": 50, ... },
//   "thresholds": { "min_innings_bat": 3, "min_balls_bowled": 60 },
//   "position_bands": { "opener_max": 2, "middle_max": 5, "lower_max": 7 },
//   "bonus_multiplier": 1.10
// }
// Every key is optional; omitted keys keep their defaults.
// ---------------------------------------------------------------------------

namespace detail {

inline double number_field(const json& obj, const char* key, double fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number()) throw ParseError(key, "expected a number");
    return it->get<double>();
}

inline int int_field(const json& obj, const char* key, int fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number_integer()) throw ParseError(key, "expected an integer");
    return it->get<int>();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline json parse_json_file(const std::string& path) {
    json doc = json::parse(read_file(path), nullptr, false);
    if (doc.is_discarded()) throw ParseError(path, "malformed JSON");
    return doc;
}

}  // namespace detail

inline RatingConfig rating_config_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("config", "expected a top-level object");
    RatingConfig config;
    auto weights = doc.find("weights");
    if (weights != doc.end()) {
        RatingWeights& w = config.weights;
        w.opener_average = detail::number_field(*weights, "opener_average", w.opener_average);
        w.opener_strike_rate =
            detail::number_field(*weights, "opener_strike_rate", w.opener_strike_rate);
        w.middle_average = detail::number_field(*weights, "middle_average", w.middle_average);
        w.middle_strike_rate =
            detail::number_field(*weights, "middle_strike_rate", w.middle_strike_rate);
        w.lower_strike_rate =
            detail::number_field(*weights, "lower_strike_rate", w.lower_strike_rate);
        w.lower_boundary_rate =
            detail::number_field(*weights, "lower_boundary_rate", w.lower_boundary_rate);
        w.bowler_economy = detail::number_field(*weights, "bowler_economy", w.bowler_economy);
        w.bowler_strike_rate =
            detail::number_field(*weights, "bowler_strike_rate", w.bowler_strike_rate);
        w.all_rounder_delta =
            detail::number_field(*weights, "all_rounder_delta", w.all_rounder_delta);
    }
    auto thresholds = doc.find("thresholds");
    if (thresholds != doc.end()) {
        config.thresholds.min_innings_bat =
            detail::int_field(*thresholds, "min_innings_bat", config.thresholds.min_innings_bat);
        config.thresholds.min_balls_bowled =
            detail::int_field(*thresholds, "min_balls_bowled", config.thresholds.min_balls_bowled);
        if (config.thresholds.min_innings_bat < 0 || config.thresholds.min_balls_bowled < 0)
            throw ParseError("thresholds", "thresholds must be non-negative");
    }
    auto bands = doc.find("position_bands");
    if (bands != doc.end()) {
        config.bands.opener_max = detail::int_field(*bands, "opener_max", config.bands.opener_max);
        config.bands.middle_max = detail::int_field(*bands, "middle_max", config.bands.middle_max);
        config.bands.lower_max = detail::int_field(*bands, "lower_max", config.bands.lower_max);
        if (config.bands.opener_max < 1 || config.bands.middle_max <= config.bands.opener_max ||
            config.bands.lower_max <= config.bands.middle_max || config.bands.lower_max > 11)
            throw ParseError("position_bands", "bands must satisfy 1 <= opener < middle < lower <= 11");
    }
    config.bonus_multiplier = detail::number_field(doc, "bonus_multiplier", config.bonus_multiplier);
    if (config.bonus_multiplier < 1.0)
        throw ParseError("bonus_multiplier", "bonus multiplier must be >= 1");
    return config;
}

inline json rating_config_to_json(const RatingConfig& config) {
    const RatingWeights& w = config.weights;
    return json{
        {"weights",
         {{"opener_average", w.opener_average},
          {"opener_strike_rate", w.opener_strike_rate},
          {"middle_average", w.middle_average},
          {"middle_strike_rate", w.middle_strike_rate},
          {"lower_strike_rate", w.lower_strike_rate},
          {"lower_boundary_rate", w.lower_boundary_rate},
          {"bowler_economy", w.bowler_economy},
          {"bowler_strike_rate", w.bowler_strike_rate},
          {"all_rounder_delta", w.all_rounder_delta}}},
        {"thresholds",
         {{"min_innings_bat", config.thresholds.min_innings_bat},
          {"min_balls_bowled", config.thresholds.min_balls_bowled}}},
        {"position_bands",
         {{"opener_max", config.bands.opener_max},
          {"middle_max", config.bands.middle_max},
          {"lower_max", config.bands.lower_max}}},
        {"bonus_multiplier", config.bonus_multiplier}};
}

inline RatingConfig load_rating_config(const std::string& path) {
    try {
        return rating_config_from_json(detail::parse_json_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.locus(), e.what());
    }
}

// ---------------------------------------------------------------------------
// Squad templates: named presets or a JSON quota document
// { "quota": { "opener": 3, "middle_order": 2, ... } }
// ---------------------------------------------------------------------------

inline SquadTemplate template_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("template", "expected a top-level object");
    auto quota = doc.find("quota");
    if (quota == doc.end() || !quota->is_object())
        throw ParseError("template", "missing 'quota' object");
    SquadTemplate tmpl;
    for (RoleCategory cat : all_role_categories) tmpl.quota[cat] = 0;
    for (const auto& [key, value] : quota->items()) {
        auto cat = parse_role_category(key);
        if (!cat) throw ParseError("quota", "unknown category '" + key + "'");
        if (!value.is_number_integer() || value.get<int>() < 0)
            throw ParseError("quota." + key, "expected a non-negative integer");
        tmpl.quota[*cat] = value.get<int>();
    }
    return tmpl;
}

inline json template_to_json(const SquadTemplate& tmpl) {
    json quota = json::object();
    for (const auto& [cat, q] : tmpl.quota) quota[std::string(to_string(cat))] = q;
    return json{{"quota", quota}};
}

/// `name_or_path` is one of the preset names ("default", "even-split") or a
/// path to a quota document.
inline SquadTemplate resolve_template(const std::string& name_or_path) {
    if (name_or_path.empty() || name_or_path == "default")
        return SquadTemplate::default_template();
    if (name_or_path == "even-split") return SquadTemplate::even_split_template();
    try {
        return template_from_json(detail::parse_json_file(name_or_path));
    } catch (const ParseError& e) {
        throw ParseError(name_or_path + ": " + e.locus(), e.what());
    }
}

// ---------------------------------------------------------------------------
// Pre-rated pools document
// { "pools": { "opener": [ {"player_id": "...", "score": 98.66}, ... ], ... } }
// ---------------------------------------------------------------------------

inline CategoryPools rated_pools_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("pools", "expected a top-level object");
    auto pools_obj = doc.find("pools");
    if (pools_obj == doc.end() || !pools_obj->is_object())
        throw ParseError("pools", "missing 'pools' object");
    CategoryPools pools;
    for (const auto& [key, entries] : pools_obj->items()) {
        auto cat = parse_role_category(key);
        if (!cat) throw ParseError("pools", "unknown category '" + key + "'");
        if (!entries.is_array()) throw ParseError("pools." + key, "expected an array");
        auto& pool = pools[*cat];
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const json& e = entries[i];
            const std::string path = "pools." + key + "[" + std::to_string(i) + "]";
            if (!e.is_object()) throw ParseError(path, "expected an object");
            auto id = e.find("player_id");
            if (id == e.end() || !id->is_string())
                throw ParseError(path, "missing string field 'player_id'");
            auto score = e.find("score");
            if (score == e.end() || !score->is_number())
                throw ParseError(path, "missing numeric field 'score'");
            pool.push_back({id->get<std::string>(), score->get<double>()});
        }
    }
    return pools;
}

inline CategoryPools load_rated_pools(const std::string& path) {
    try {
        return rated_pools_from_json(detail::parse_json_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.locus(), e.what());
    }
}

// ---------------------------------------------------------------------------
// Squad name lists (for compare): either a JSON {"players": [...]} document
// or plain text, one name per line, '#' comments allowed.
// ---------------------------------------------------------------------------

inline std::vector<std::string> load_name_list(const std::string& path) {
    const std::string text = detail::read_file(path);
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') {
            json doc = json::parse(text, nullptr, false);
            if (doc.is_discarded()) throw ParseError(path, "malformed JSON");
            auto players = doc.find("players");
            if (players == doc.end() || !players->is_array())
                throw ParseError(path, "missing 'players' array");
            std::vector<std::string> names;
            for (const json& p : *players) {
                if (!p.is_string()) throw ParseError(path, "player names must be strings");
                names.push_back(p.get<std::string>());
            }
            return names;
        }
        break;
    }
    std::vector<std::string> names;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        names.push_back(line.substr(start));
    }
    if (names.empty()) throw ParseError(path, "no player names found");
    return names;
}

/// Parses a repeatable `--include` argument of the form `player_id:category`.
inline std::pair<std::string, RoleCategory> parse_include_spec(const std::string& spec) {
    const std::size_t colon = spec.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size())
        throw Error("invalid include '" + spec + "', expected player_id:category");
    const std::string id = spec.substr(0, colon);
    const std::string cat_name = spec.substr(colon + 1);
    auto cat = parse_role_category(cat_name);
    if (!cat) throw Error("invalid include '" + spec + "': unknown category '" + cat_name + "'");
    return {id, *cat};
}

}  // namespace squadrank
