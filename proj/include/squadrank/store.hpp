#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "squadrank/domain.hpp"

namespace squadrank {

/// In-memory match store: a player registry plus validated scorecards.
/// Matches are kept sorted by (date, match_id); contents are never mutated
/// after insertion, so any number of readers may share a store.
class MatchStore {
public:
    struct Filter {
        std::set<std::string> competitions;  // empty = all
        std::optional<Date> from;
        std::optional<Date> to;
        std::optional<bool> international;
    };

    const std::map<std::string, PlayerRecord>& players() const { return players_; }
    const std::vector<MatchScorecard>& matches() const { return matches_; }
    std::size_t match_count() const { return matches_.size(); }

    const PlayerRecord* find_player(const std::string& player_id) const {
        auto it = players_.find(player_id);
        return it == players_.end() ? nullptr : &it->second;
    }

    bool has_match(const std::string& match_id) const {
        return std::any_of(matches_.begin(), matches_.end(),
                           [&](const MatchScorecard& m) { return m.match_id == match_id; });
    }

    std::optional<Date> reference_date() const { return reference_date_; }
    void set_reference_date(Date date) { reference_date_ = date; }

    /// Configured reference date, falling back to the latest match date.
    Date effective_reference_date() const {
        if (reference_date_) return *reference_date_;
        if (matches_.empty())
            throw Error("no reference date configured and the store holds no matches");
        return matches_.back().date;
    }

    void add_player(const PlayerRecord& player) {
        validate_player(player);
        auto it = players_.find(player.player_id);
        if (it != players_.end()) {
            if (it->second == player) return;  // identical re-declaration is a no-op
            throw Error("player '" + player.player_id +
                        "' is already registered with different attributes");
        }
        players_.emplace(player.player_id, player);
    }

    void add_match(const MatchScorecard& match) {
        validate_match(match);
        auto pos = std::upper_bound(matches_.begin(), matches_.end(), match,
                                    [](const MatchScorecard& a, const MatchScorecard& b) {
                                        if (a.date != b.date) return a.date < b.date;
                                        return a.match_id < b.match_id;
                                    });
        matches_.insert(pos, match);
    }

    /// Matches satisfying every filter clause, ordered by (date, match_id).
    std::vector<const MatchScorecard*> query(const Filter& filter) const {
        if (filter.from && filter.to && *filter.to < *filter.from)
            throw Error("inverted date range: " + format_date(*filter.from) + " > " +
                        format_date(*filter.to));
        std::vector<const MatchScorecard*> out;
        for (const auto& m : matches_) {
            if (!filter.competitions.empty() && !filter.competitions.count(m.competition))
                continue;
            if (filter.from && m.date < *filter.from) continue;
            if (filter.to && *filter.to < m.date) continue;
            if (filter.international && m.is_international != *filter.international) continue;
            out.push_back(&m);
        }
        return out;
    }

    std::vector<const MatchScorecard*> all_matches() const { return query(Filter{}); }

    bool operator==(const MatchStore& other) const {
        return players_ == other.players_ && matches_ == other.matches_ &&
               reference_date_ == other.reference_date_;
    }

    /// Entry invariants for a single match, checked against this store's
    /// registry. Throws ParseError with `locus_prefix` prepended to the field
    /// path on the first violation.
    void validate_match(const MatchScorecard& match, const std::string& locus_prefix = "") const {
        auto fail = [&](const std::string& where, const std::string& msg) {
            throw ParseError(locus_prefix.empty() ? where : locus_prefix + where, msg);
        };
        if (match.match_id.empty()) fail("match_id", "match_id must be non-empty");
        if (has_match(match.match_id)) fail("match_id", "duplicate match_id '" + match.match_id + "'");
        if (!match.date.ok()) fail("date", "invalid date");
        for (std::size_t inn = 0; inn < match.innings.size(); ++inn) {
            const Innings& innings = match.innings[inn];
            const std::string base = "innings[" + std::to_string(inn) + "].";
            if (innings.batting.size() > 11)
                fail(base + "batting", "more than 11 batting entries in one innings");
            std::set<int> positions;
            std::set<std::string> batters;
            for (std::size_t i = 0; i < innings.batting.size(); ++i) {
                const BattingEntry& e = innings.batting[i];
                const std::string where = base + "batting[" + std::to_string(i) + "]";
                const PlayerRecord* player = find_player(e.player_id);
                if (!player) fail(where, "unknown player '" + e.player_id + "'");
                if (e.batting_position < 1 || e.batting_position > 11)
                    fail(where, "batting_position must be in 1..11");
                if (!positions.insert(e.batting_position).second)
                    fail(where, "duplicate batting_position " + std::to_string(e.batting_position));
                if (!batters.insert(e.player_id).second)
                    fail(where, "player '" + e.player_id + "' bats twice in one innings");
                if (e.runs < 0 || e.balls_faced < 0 || e.fours < 0 || e.sixes < 0)
                    fail(where, "negative batting figure");
                if (4 * e.fours + 6 * e.sixes > e.runs)
                    fail(where, "boundary runs exceed total");
            }
            std::set<std::string> bowlers;
            for (std::size_t i = 0; i < innings.bowling.size(); ++i) {
                const BowlingEntry& e = innings.bowling[i];
                const std::string where = base + "bowling[" + std::to_string(i) + "]";
                const PlayerRecord* player = find_player(e.player_id);
                if (!player) fail(where, "unknown player '" + e.player_id + "'");
                if (player->bowling_style == BowlingStyle::none)
                    fail(where, "player '" + e.player_id + "' has bowling_style none");
                if (!bowlers.insert(e.player_id).second)
                    fail(where, "player '" + e.player_id + "' bowls twice in one innings");
                if (e.balls_bowled < 0 || e.runs_conceded < 0 || e.wickets < 0)
                    fail(where, "negative bowling figure");
                if (e.wickets > 10) fail(where, "more than 10 wickets in one entry");
                if (e.wickets > 0 && e.balls_bowled == 0)
                    fail(where, "wickets taken without a ball bowled");
                if (e.balls_bowled == 0 && e.runs_conceded > 0)
                    fail(where, "runs conceded without a ball bowled");
            }
        }
    }

private:
    static void validate_player(const PlayerRecord& player) {
        if (player.player_id.empty()) throw Error("player_id must be non-empty");
    }

    std::map<std::string, PlayerRecord> players_;
    std::vector<MatchScorecard> matches_;  // sorted by (date, match_id)
    std::optional<Date> reference_date_;
};

}  // namespace squadrank
