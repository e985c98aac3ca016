#pragma once

#include <charconv>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "squadrank/aggregate.hpp"
#include "squadrank/rating.hpp"
#include "squadrank/selection.hpp"

namespace squadrank {

using json = nlohmann::json;

enum class OutputFormat { table, csv, json_lines };

inline std::optional<OutputFormat> parse_output_format(std::string_view text) {
    if (text == "table") return OutputFormat::table;
    if (text == "csv") return OutputFormat::csv;
    if (text == "json-lines" || text == "jsonl") return OutputFormat::json_lines;
    return std::nullopt;
}

/// Shortest round-trip decimal form.
inline std::string fmt_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

inline std::string fmt_fixed(double value, int decimals = 2) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

using NameLookup = std::function<std::string(const std::string&)>;

inline NameLookup identity_names() {
    return [](const std::string& id) { return id; };
}

inline NameLookup store_names(const MatchStore& store) {
    return [&store](const std::string& id) {
        const PlayerRecord* p = store.find_player(id);
        return p ? p->display_name : id;
    };
}

namespace detail {

inline std::string render_text_table(const std::vector<std::string>& header,
                                     const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) out << std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    };
    emit(header);
    std::vector<std::string> rule;
    for (std::size_t w : widths) rule.push_back(std::string(w, '-'));
    emit(rule);
    for (const auto& row : rows) emit(row);
    return out.str();
}

inline std::string csv_cell(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    return out + "\"";
}

inline std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_cell(cells[i]);
    }
    out.push_back('\n');
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ratings
// ---------------------------------------------------------------------------

inline json rating_point_to_json(const RatingPoint& p, const NameLookup& names) {
    json components = json::array();
    for (const RatingComponent& c : p.components) {
        json raw = c.raw ? json(*c.raw) : json(nullptr);
        components.push_back(
            json{{"term", c.term}, {"raw", raw}, {"contribution", c.contribution}});
    }
    return json{{"player_id", p.player_id},
                {"display_name", names(p.player_id)},
                {"category", std::string(to_string(p.category))},
                {"score", p.score},
                {"components", components},
                {"bonus_applied", p.bonus_applied},
                {"bonus_multiplier", p.bonus_multiplier}};
}

inline RatingPoint rating_point_from_json(const json& obj) {
    RatingPoint p;
    p.player_id = obj.at("player_id").get<std::string>();
    auto cat = parse_role_category(obj.at("category").get<std::string>());
    if (!cat) throw ParseError("category", "unknown category");
    p.category = *cat;
    p.score = obj.at("score").get<double>();
    for (const json& c : obj.at("components")) {
        RatingComponent component;
        component.term = c.at("term").get<std::string>();
        if (!c.at("raw").is_null()) component.raw = c.at("raw").get<double>();
        component.contribution = c.at("contribution").get<double>();
        p.components.push_back(std::move(component));
    }
    p.bonus_applied = obj.at("bonus_applied").get<bool>();
    p.bonus_multiplier = obj.at("bonus_multiplier").get<double>();
    return p;
}

inline std::string render_ratings(const std::vector<RatingPoint>& points, const NameLookup& names,
                                  OutputFormat format) {
    if (format == OutputFormat::json_lines) {
        std::string out;
        for (const RatingPoint& p : points) out += rating_point_to_json(p, names).dump() + "\n";
        return out;
    }
    std::vector<std::string> terms;
    if (!points.empty())
        for (const RatingComponent& c : points.front().components) terms.push_back(c.term);

    if (format == OutputFormat::csv) {
        std::string out;
        std::vector<std::string> header = {"rank", "player_id", "display_name", "score"};
        for (const std::string& t : terms) {
            header.push_back(t + "_raw");
            header.push_back(t + "_points");
        }
        header.push_back("bonus_applied");
        out += detail::csv_line(header);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const RatingPoint& p = points[i];
            std::vector<std::string> row = {std::to_string(i + 1), p.player_id,
                                            names(p.player_id), fmt_double(p.score)};
            for (const RatingComponent& c : p.components) {
                row.push_back(c.raw ? fmt_double(*c.raw) : "");
                row.push_back(fmt_double(c.contribution));
            }
            row.push_back(p.bonus_applied ? "true" : "false");
            out += detail::csv_line(row);
        }
        return out;
    }

    std::vector<std::string> header = {"rank", "player", "score"};
    for (const std::string& t : terms) header.push_back(t + " (raw/pts)");
    header.push_back("bonus");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const RatingPoint& p = points[i];
        std::vector<std::string> row = {std::to_string(i + 1), names(p.player_id),
                                        fmt_fixed(p.score)};
        for (const RatingComponent& c : p.components)
            row.push_back((c.raw ? fmt_fixed(*c.raw) : std::string("-")) + "/" +
                          fmt_fixed(c.contribution));
        row.push_back(p.bonus_applied ? "x" + fmt_double(p.bonus_multiplier) : "");
        rows.push_back(std::move(row));
    }
    return detail::render_text_table(header, rows);
}

// ---------------------------------------------------------------------------
// Player stats
// ---------------------------------------------------------------------------

inline json batting_stats_to_json(const BattingStats& s) {
    return json{{"innings", s.innings},
                {"runs", s.runs},
                {"balls", s.balls},
                {"dismissals", s.dismissals},
                {"fours", s.fours},
                {"sixes", s.sixes},
                {"opened_count", s.opened_count},
                {"middle_count", s.middle_count},
                {"lower_count", s.lower_count},
                {"average", s.average},
                {"strike_rate", s.strike_rate},
                {"boundary_rate", s.boundary_rate}};
}

inline json bowling_stats_to_json(const BowlingStats& s) {
    return json{{"balls", s.balls},
                {"runs_conceded", s.runs_conceded},
                {"wickets", s.wickets},
                {"economy", s.economy},
                {"strike_rate", s.strike_rate ? json(*s.strike_rate) : json(nullptr)}};
}

inline std::string render_stats(const PlayerRecord& player, const BattingStats& batting,
                                const BowlingStats& bowling, bool recent_international,
                                OutputFormat format) {
    json obj{{"player_id", player.player_id},
             {"display_name", player.display_name},
             {"bowling_style", std::string(to_string(player.bowling_style))},
             {"is_wicketkeeper", player.is_wicketkeeper},
             {"batting", batting_stats_to_json(batting)},
             {"bowling", bowling_stats_to_json(bowling)},
             {"played_international_recent", recent_international}};
    if (format == OutputFormat::json_lines) return obj.dump() + "\n";
    if (format == OutputFormat::csv) {
        std::vector<std::string> header, row;
        header = {"player_id", "display_name", "bowling_style", "is_wicketkeeper",
                  "innings", "runs", "balls", "dismissals", "fours", "sixes",
                  "average", "strike_rate", "boundary_rate",
                  "balls_bowled", "runs_conceded", "wickets", "economy", "bowling_strike_rate",
                  "played_international_recent"};
        row = {player.player_id, player.display_name,
               std::string(to_string(player.bowling_style)),
               player.is_wicketkeeper ? "true" : "false",
               std::to_string(batting.innings), std::to_string(batting.runs),
               std::to_string(batting.balls), std::to_string(batting.dismissals),
               std::to_string(batting.fours), std::to_string(batting.sixes),
               fmt_double(batting.average), fmt_double(batting.strike_rate),
               fmt_double(batting.boundary_rate),
               std::to_string(bowling.balls), std::to_string(bowling.runs_conceded),
               std::to_string(bowling.wickets), fmt_double(bowling.economy),
               bowling.strike_rate ? fmt_double(*bowling.strike_rate) : "",
               recent_international ? "true" : "false"};
        return detail::csv_line(header) + detail::csv_line(row);
    }
    std::ostringstream out;
    out << player.display_name << " (" << player.player_id << ")\n";
    out << "  style: " << to_string(player.bowling_style)
        << (player.is_wicketkeeper ? ", wicketkeeper" : "") << "\n";
    out << "  batting: " << batting.innings << " inns, " << batting.runs << " runs, avg "
        << fmt_fixed(batting.average) << ", sr " << fmt_fixed(batting.strike_rate)
        << ", boundaries/inns " << fmt_fixed(batting.boundary_rate) << "\n";
    out << "  bowling: " << bowling.balls << " balls, " << bowling.runs_conceded
        << " conceded, " << bowling.wickets << " wkts, econ " << fmt_fixed(bowling.economy)
        << ", sr "
        << (bowling.strike_rate ? fmt_fixed(*bowling.strike_rate) : std::string("-")) << "\n";
    out << "  recent international: " << (recent_international ? "yes" : "no") << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Squads
// ---------------------------------------------------------------------------

inline json squad_to_json(const Squad& squad, const NameLookup& names) {
    json slots = json::array();
    for (const SquadSlot& s : squad.slots)
        slots.push_back(json{{"player_id", s.player_id},
                             {"display_name", names(s.player_id)},
                             {"category", std::string(to_string(s.category))},
                             {"score", s.score},
                             {"provenance", std::string(to_string(s.provenance))}});
    return json{{"slots", slots}, {"total_score", squad.total_score}};
}

inline std::string render_squad(const Squad& squad, const NameLookup& names,
                                OutputFormat format) {
    if (format == OutputFormat::json_lines) {
        std::string out;
        for (const SquadSlot& s : squad.slots)
            out += json{{"player_id", s.player_id},
                        {"display_name", names(s.player_id)},
                        {"category", std::string(to_string(s.category))},
                        {"score", s.score},
                        {"provenance", std::string(to_string(s.provenance))}}
                       .dump() +
                   "\n";
        out += json{{"total_score", squad.total_score},
                    {"size", squad.slots.size()}}.dump() + "\n";
        return out;
    }
    if (format == OutputFormat::csv) {
        std::string out =
            detail::csv_line({"category", "player_id", "display_name", "score", "provenance"});
        for (const SquadSlot& s : squad.slots)
            out += detail::csv_line({std::string(to_string(s.category)), s.player_id,
                                     names(s.player_id), fmt_double(s.score),
                                     std::string(to_string(s.provenance))});
        out += detail::csv_line({"total", "", "", fmt_double(squad.total_score), ""});
        return out;
    }
    std::vector<std::vector<std::string>> rows;
    for (const SquadSlot& s : squad.slots)
        rows.push_back({std::string(to_string(s.category)), names(s.player_id),
                        fmt_fixed(s.score),
                        s.provenance == Provenance::selected
                            ? std::string("")
                            : std::string(to_string(s.provenance))});
    std::string out = detail::render_text_table({"category", "player", "score", "note"}, rows);
    out += "total: " + fmt_fixed(squad.total_score) + " (" + std::to_string(squad.slots.size()) +
           " players)\n";
    return out;
}

// ---------------------------------------------------------------------------
// Compare reports
// ---------------------------------------------------------------------------

inline std::string render_compare(const CompareReport& report, OutputFormat format) {
    if (format == OutputFormat::json_lines) {
        return json{{"common", report.common},
                    {"only_a", report.only_a},
                    {"only_b", report.only_b},
                    {"mismatch_count", report.mismatch_count},
                    {"jaccard", report.jaccard}}
                   .dump() +
               "\n";
    }
    if (format == OutputFormat::csv) {
        std::string out = detail::csv_line({"membership", "player"});
        for (const std::string& n : report.common) out += detail::csv_line({"common", n});
        for (const std::string& n : report.only_a) out += detail::csv_line({"only_a", n});
        for (const std::string& n : report.only_b) out += detail::csv_line({"only_b", n});
        out += detail::csv_line({"mismatch_count", std::to_string(report.mismatch_count)});
        out += detail::csv_line({"jaccard", fmt_double(report.jaccard)});
        return out;
    }
    std::ostringstream out;
    auto section = [&](const char* label, const std::vector<std::string>& names) {
        out << label << " (" << names.size() << "):";
        for (const std::string& n : names) out << " " << n << ";";
        out << "\n";
    };
    section("common", report.common);
    section("only in A", report.only_a);
    section("only in B", report.only_b);
    out << "mismatches: " << report.mismatch_count << "\n";
    out << "jaccard: " << fmt_fixed(report.jaccard, 4) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Figure data
// ---------------------------------------------------------------------------

struct PlotPoint {
    std::string player_id;
    std::vector<std::pair<std::string, std::optional<double>>> values;
};

inline std::string render_plotdata(const std::vector<PlotPoint>& points, const NameLookup& names,
                                   OutputFormat format) {
    if (format == OutputFormat::json_lines) {
        std::string out;
        for (const PlotPoint& p : points) {
            json obj{{"player_id", p.player_id}, {"display_name", names(p.player_id)}};
            for (const auto& [key, value] : p.values)
                obj[key] = value ? json(*value) : json(nullptr);
            out += obj.dump() + "\n";
        }
        return out;
    }
    std::vector<std::string> header = {"player_id", "display_name"};
    if (!points.empty())
        for (const auto& [key, value] : points.front().values) header.push_back(key);
    if (format == OutputFormat::csv) {
        std::string out = detail::csv_line(header);
        for (const PlotPoint& p : points) {
            std::vector<std::string> row = {p.player_id, names(p.player_id)};
            for (const auto& [key, value] : p.values)
                row.push_back(value ? fmt_double(*value) : "");
            out += detail::csv_line(row);
        }
        return out;
    }
    std::vector<std::vector<std::string>> rows;
    for (const PlotPoint& p : points) {
        std::vector<std::string> row = {p.player_id, names(p.player_id)};
        for (const auto& [key, value] : p.values)
            row.push_back(value ? fmt_fixed(*value, 3) : "-");
        rows.push_back(std::move(row));
    }
    return detail::render_text_table(header, rows);
}

}  // namespace squadrank
