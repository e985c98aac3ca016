#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "squadrank/domain.hpp"
#include "squadrank/store.hpp"

namespace squadrank {

using json = nlohmann::json;

inline constexpr int store_format_version = 1;

struct ParsedDocument {
    std::vector<PlayerRecord> players;
    std::vector<MatchScorecard> matches;
};

// ---------------------------------------------------------------------------
// JSON record conversions
// ---------------------------------------------------------------------------

namespace detail {

inline const json& require_field(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) throw ParseError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path, std::string("missing field '") + key + "'");
    return *it;
}

inline std::string field_string(const json& obj, const char* key, const std::string& path) {
    const json& v = require_field(obj, key, path);
    if (!v.is_string()) throw ParseError(path + "." + key, "expected a string");
    return v.get<std::string>();
}

inline int field_int(const json& obj, const char* key, const std::string& path) {
    const json& v = require_field(obj, key, path);
    if (!v.is_number_integer()) throw ParseError(path + "." + key, "expected an integer");
    return v.get<int>();
}

inline bool field_bool(const json& obj, const char* key, const std::string& path) {
    const json& v = require_field(obj, key, path);
    if (!v.is_boolean()) throw ParseError(path + "." + key, "expected a boolean");
    return v.get<bool>();
}

}  // namespace detail

inline json to_json(const PlayerRecord& p) {
    return json{{"player_id", p.player_id},
                {"display_name", p.display_name},
                {"bowling_style", std::string(to_string(p.bowling_style))},
                {"is_wicketkeeper", p.is_wicketkeeper}};
}

inline PlayerRecord player_from_json(const json& obj, const std::string& path) {
    using namespace detail;
    PlayerRecord p;
    p.player_id = field_string(obj, "player_id", path);
    p.display_name = field_string(obj, "display_name", path);
    const std::string style = field_string(obj, "bowling_style", path);
    auto parsed = parse_bowling_style(style);
    if (!parsed) throw ParseError(path + ".bowling_style", "unknown bowling style '" + style + "'");
    p.bowling_style = *parsed;
    p.is_wicketkeeper = field_bool(obj, "is_wicketkeeper", path);
    return p;
}

inline json to_json(const BattingEntry& e) {
    return json{{"player_id", e.player_id}, {"batting_position", e.batting_position},
                {"runs", e.runs},           {"balls_faced", e.balls_faced},
                {"fours", e.fours},         {"sixes", e.sixes},
                {"dismissed", e.dismissed}};
}

inline json to_json(const BowlingEntry& e) {
    return json{{"player_id", e.player_id},
                {"balls_bowled", e.balls_bowled},
                {"runs_conceded", e.runs_conceded},
                {"wickets", e.wickets}};
}

inline json to_json(const MatchScorecard& m) {
    json innings = json::array();
    for (const Innings& inn : m.innings) {
        json batting = json::array();
        for (const BattingEntry& e : inn.batting) batting.push_back(to_json(e));
        json bowling = json::array();
        for (const BowlingEntry& e : inn.bowling) bowling.push_back(to_json(e));
        innings.push_back(json{{"batting", batting}, {"bowling", bowling}});
    }
    return json{{"match_id", m.match_id},
                {"date", format_date(m.date)},
                {"competition", m.competition},
                {"is_international", m.is_international},
                {"innings", innings}};
}

inline MatchScorecard match_from_json(const json& obj, const std::string& path) {
    using namespace detail;
    MatchScorecard m;
    m.match_id = field_string(obj, "match_id", path);
    const std::string date = field_string(obj, "date", path);
    auto parsed = try_parse_date(date);
    if (!parsed) throw ParseError(path + ".date", "invalid date '" + date + "', expected YYYY-MM-DD");
    m.date = *parsed;
    m.competition = field_string(obj, "competition", path);
    m.is_international = field_bool(obj, "is_international", path);

    const json& innings = require_field(obj, "innings", path);
    if (!innings.is_array() || innings.size() != 2)
        throw ParseError(path + ".innings", "expected exactly 2 innings");
    for (std::size_t i = 0; i < 2; ++i) {
        const std::string inn_path = path + ".innings[" + std::to_string(i) + "]";
        const json& inn = innings[i];
        const json& batting = require_field(inn, "batting", inn_path);
        if (!batting.is_array()) throw ParseError(inn_path + ".batting", "expected an array");
        for (std::size_t j = 0; j < batting.size(); ++j) {
            const std::string e_path = inn_path + ".batting[" + std::to_string(j) + "]";
            const json& b = batting[j];
            BattingEntry e;
            e.player_id = field_string(b, "player_id", e_path);
            e.batting_position = field_int(b, "batting_position", e_path);
            e.runs = field_int(b, "runs", e_path);
            e.balls_faced = field_int(b, "balls_faced", e_path);
            e.fours = field_int(b, "fours", e_path);
            e.sixes = field_int(b, "sixes", e_path);
            e.dismissed = field_bool(b, "dismissed", e_path);
            m.innings[i].batting.push_back(e);
        }
        const json& bowling = require_field(inn, "bowling", inn_path);
        if (!bowling.is_array()) throw ParseError(inn_path + ".bowling", "expected an array");
        for (std::size_t j = 0; j < bowling.size(); ++j) {
            const std::string e_path = inn_path + ".bowling[" + std::to_string(j) + "]";
            const json& b = bowling[j];
            BowlingEntry e;
            e.player_id = field_string(b, "player_id", e_path);
            e.balls_bowled = field_int(b, "balls_bowled", e_path);
            e.runs_conceded = field_int(b, "runs_conceded", e_path);
            e.wickets = field_int(b, "wickets", e_path);
            m.innings[i].bowling.push_back(e);
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Document parsing: object encoding
// ---------------------------------------------------------------------------

inline ParsedDocument parse_scorecard_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
    }
    if (!doc.is_object()) throw ParseError("document", "expected a top-level object");

    ParsedDocument out;
    auto players = doc.find("players");
    if (players != doc.end()) {
        if (!players->is_array()) throw ParseError("players", "expected an array");
        for (std::size_t i = 0; i < players->size(); ++i)
            out.players.push_back(
                player_from_json((*players)[i], "players[" + std::to_string(i) + "]"));
    }
    auto matches = doc.find("matches");
    if (matches != doc.end()) {
        if (!matches->is_array()) throw ParseError("matches", "expected an array");
        for (std::size_t i = 0; i < matches->size(); ++i)
            out.matches.push_back(
                match_from_json((*matches)[i], "matches[" + std::to_string(i) + "]"));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Document parsing: flat delimited table
//
// CSV with a header row; a `record_type` column in {player, match, batting,
// bowling}. Batting/bowling rows attach to their match via `match_id` and a
// 1-based `innings` column. Rows may appear in any order.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    return fields;
}

class TableRow {
public:
    TableRow(const std::map<std::string, std::size_t>& columns,
             const std::vector<std::string>& cells, int line)
        : columns_(columns), cells_(cells), line_(line) {}

    std::string locus() const { return "line " + std::to_string(line_); }

    std::string get(const std::string& column) const {
        auto it = columns_.find(column);
        if (it == columns_.end() || it->second >= cells_.size() || cells_[it->second].empty())
            throw ParseError(locus(), "missing value for column '" + column + "'");
        return cells_[it->second];
    }

    int get_int(const std::string& column) const {
        const std::string text = get(column);
        try {
            std::size_t used = 0;
            int value = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return value;
        } catch (const std::exception&) {
            throw ParseError(locus(), "column '" + column + "': expected an integer, got '" +
                                          text + "'");
        }
    }

    bool get_bool(const std::string& column) const {
        const std::string text = get(column);
        if (text == "true") return true;
        if (text == "false") return false;
        throw ParseError(locus(), "column '" + column + "': expected true/false, got '" + text + "'");
    }

private:
    const std::map<std::string, std::size_t>& columns_;
    const std::vector<std::string>& cells_;
    int line_;
};

}  // namespace detail

inline ParsedDocument parse_scorecard_table(const std::string& text) {
    using namespace detail;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("line 1", "empty document");

    std::map<std::string, std::size_t> columns;
    {
        auto headers = split_csv_line(line);
        for (std::size_t i = 0; i < headers.size(); ++i) columns[headers[i]] = i;
    }
    if (!columns.count("record_type")) throw ParseError("line 1", "missing 'record_type' column");

    ParsedDocument out;
    std::map<std::string, std::size_t> match_index;  // match_id -> out.matches slot
    struct PendingEntry {
        std::string kind;
        std::string match_id;
        int innings;
        BattingEntry batting;
        BowlingEntry bowling;
        int line;
    };
    std::vector<PendingEntry> pending;

    int line_no = 1;
    std::vector<std::string> cells;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        cells = split_csv_line(line);
        TableRow row(columns, cells, line_no);
        const std::string kind = row.get("record_type");
        if (kind == "player") {
            PlayerRecord p;
            p.player_id = row.get("player_id");
            p.display_name = row.get("display_name");
            const std::string style = row.get("bowling_style");
            auto parsed = parse_bowling_style(style);
            if (!parsed) throw ParseError(row.locus(), "unknown bowling style '" + style + "'");
            p.bowling_style = *parsed;
            p.is_wicketkeeper = row.get_bool("is_wicketkeeper");
            out.players.push_back(p);
        } else if (kind == "match") {
            MatchScorecard m;
            m.match_id = row.get("match_id");
            const std::string date = row.get("date");
            auto parsed = try_parse_date(date);
            if (!parsed)
                throw ParseError(row.locus(), "invalid date '" + date + "', expected YYYY-MM-DD");
            m.date = *parsed;
            m.competition = row.get("competition");
            m.is_international = row.get_bool("is_international");
            if (match_index.count(m.match_id))
                throw ParseError(row.locus(), "duplicate match_id '" + m.match_id + "'");
            match_index[m.match_id] = out.matches.size();
            out.matches.push_back(m);
        } else if (kind == "batting") {
            PendingEntry e;
            e.kind = kind;
            e.match_id = row.get("match_id");
            e.innings = row.get_int("innings");
            e.batting.player_id = row.get("player_id");
            e.batting.batting_position = row.get_int("batting_position");
            e.batting.runs = row.get_int("runs");
            e.batting.balls_faced = row.get_int("balls_faced");
            e.batting.fours = row.get_int("fours");
            e.batting.sixes = row.get_int("sixes");
            e.batting.dismissed = row.get_bool("dismissed");
            e.line = line_no;
            pending.push_back(std::move(e));
        } else if (kind == "bowling") {
            PendingEntry e;
            e.kind = kind;
            e.match_id = row.get("match_id");
            e.innings = row.get_int("innings");
            e.bowling.player_id = row.get("player_id");
            e.bowling.balls_bowled = row.get_int("balls_bowled");
            e.bowling.runs_conceded = row.get_int("runs_conceded");
            e.bowling.wickets = row.get_int("wickets");
            e.line = line_no;
            pending.push_back(std::move(e));
        } else {
            throw ParseError(row.locus(), "unknown record_type '" + kind + "'");
        }
    }

    for (const auto& e : pending) {
        const std::string locus = "line " + std::to_string(e.line);
        auto it = match_index.find(e.match_id);
        if (it == match_index.end())
            throw ParseError(locus, "entry references undeclared match '" + e.match_id + "'");
        if (e.innings < 1 || e.innings > 2)
            throw ParseError(locus, "innings must be 1 or 2");
        Innings& innings = out.matches[it->second].innings[e.innings - 1];
        if (e.kind == "batting")
            innings.batting.push_back(e.batting);
        else
            innings.bowling.push_back(e.bowling);
    }
    return out;
}

/// Parses either document encoding, sniffing on the first non-space byte.
inline ParsedDocument parse_scorecard_document(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_scorecard_json(text);
        return parse_scorecard_table(text);
    }
    throw ParseError("document", "empty document");
}

// ---------------------------------------------------------------------------
// Import
// ---------------------------------------------------------------------------

/// Parses, validates, and commits one document. All-or-nothing: on any error
/// the store is left untouched. Returns the number of matches added.
inline int import_scorecards(MatchStore& store, const std::string& text) {
    ParsedDocument doc = parse_scorecard_document(text);
    MatchStore staged = store;
    for (const PlayerRecord& p : doc.players) staged.add_player(p);
    for (std::size_t i = 0; i < doc.matches.size(); ++i) {
        staged.validate_match(doc.matches[i], "matches[" + std::to_string(i) + "].");
        staged.add_match(doc.matches[i]);
    }
    store = std::move(staged);
    return static_cast<int>(doc.matches.size());
}

inline int import_scorecards(MatchStore& store, std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return import_scorecards(store, buf.str());
}

// ---------------------------------------------------------------------------
// Store persistence (object encoding plus format_version)
// ---------------------------------------------------------------------------

inline json store_to_json(const MatchStore& store) {
    json players = json::array();
    for (const auto& [id, p] : store.players()) players.push_back(to_json(p));
    json matches = json::array();
    for (const MatchScorecard& m : store.matches()) matches.push_back(to_json(m));
    json out{{"format_version", store_format_version},
             {"players", players},
             {"matches", matches}};
    if (store.reference_date()) out["reference_date"] = format_date(*store.reference_date());
    return out;
}

inline MatchStore store_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("store", "expected a top-level object");
    auto version = doc.find("format_version");
    if (version == doc.end()) throw ParseError("store", "missing format_version");
    if (!version->is_number_integer() || version->get<int>() != store_format_version)
        throw ParseError("store", "unsupported format_version " + version->dump() + " (expected " +
                                      std::to_string(store_format_version) + ")");
    MatchStore store;
    auto players = doc.find("players");
    if (players != doc.end() && players->is_array())
        for (std::size_t i = 0; i < players->size(); ++i)
            store.add_player(player_from_json((*players)[i], "players[" + std::to_string(i) + "]"));
    auto matches = doc.find("matches");
    if (matches != doc.end() && matches->is_array())
        for (std::size_t i = 0; i < matches->size(); ++i) {
            const std::string path = "matches[" + std::to_string(i) + "]";
            MatchScorecard m = match_from_json((*matches)[i], path);
            store.validate_match(m, path + ".");
            store.add_match(m);
        }
    auto ref = doc.find("reference_date");
    if (ref != doc.end()) {
        if (!ref->is_string()) throw ParseError("reference_date", "expected a string");
        store.set_reference_date(parse_date(ref->get<std::string>()));
    }
    return store;
}

inline void save_store(const MatchStore& store, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write store file '" + path + "'");
    out << store_to_json(store).dump(2) << "\n";
    if (!out) throw Error("failed writing store file '" + path + "'");
}

inline MatchStore load_store(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read store file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    json doc = json::parse(buf.str(), nullptr, false);
    if (doc.is_discarded()) throw ParseError(path, "malformed JSON");
    try {
        return store_from_json(doc);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.locus(), e.what());
    }
}

// ---------------------------------------------------------------------------
// Flat-table serialization (the secondary document encoding)
// ---------------------------------------------------------------------------

namespace detail {

inline std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

}  // namespace detail

inline std::string store_to_table(const MatchStore& store) {
    using detail::csv_escape;
    std::ostringstream out;
    out << "record_type,player_id,display_name,bowling_style,is_wicketkeeper,match_id,date,"
           "competition,is_international,innings,batting_position,runs,balls_faced,fours,sixes,"
           "dismissed,balls_bowled,runs_conceded,wickets\n";
    for (const auto& [id, p] : store.players())
        out << "player," << csv_escape(id) << "," << csv_escape(p.display_name) << ","
            << to_string(p.bowling_style) << "," << (p.is_wicketkeeper ? "true" : "false")
            << ",,,,,,,,,,,,,,\n";
    for (const MatchScorecard& m : store.matches()) {
        out << "match,,,,," << csv_escape(m.match_id) << "," << format_date(m.date) << ","
            << csv_escape(m.competition) << "," << (m.is_international ? "true" : "false")
            << ",,,,,,,,,,\n";
        for (std::size_t inn = 0; inn < m.innings.size(); ++inn) {
            for (const BattingEntry& e : m.innings[inn].batting)
                out << "batting," << csv_escape(e.player_id) << ",,,," << csv_escape(m.match_id)
                    << ",,,," << (inn + 1) << "," << e.batting_position << "," << e.runs << ","
                    << e.balls_faced << "," << e.fours << "," << e.sixes << ","
                    << (e.dismissed ? "true" : "false") << ",,,\n";
            for (const BowlingEntry& e : m.innings[inn].bowling)
                out << "bowling," << csv_escape(e.player_id) << ",,,," << csv_escape(m.match_id)
                    << ",,,," << (inn + 1) << ",,,,,,," << e.balls_bowled << "," << e.runs_conceded
                    << "," << e.wickets << "\n";
        }
    }
    return out.str();
}

}  // namespace squadrank
