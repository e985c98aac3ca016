#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "squadrank/domain.hpp"
#include "squadrank/store.hpp"

namespace squadrank {

/// Batting-position bands. A position p is an opening slot when
/// p <= opener_max, middle order when opener_max < p <= middle_max, lower
/// order when middle_max < p <= lower_max. Positions above lower_max are
/// not batting-rated.
struct PositionBands {
    int opener_max = 2;
    int middle_max = 5;
    int lower_max = 7;

    bool operator==(const PositionBands&) const = default;
};

struct BattingStats {
    int innings = 0;
    int runs = 0;
    int balls = 0;
    int dismissals = 0;
    int fours = 0;
    int sixes = 0;
    int opened_count = 0;
    int middle_count = 0;
    int lower_count = 0;
    double average = 0.0;       // runs / max(1, dismissals)
    double strike_rate = 0.0;   // 100 * runs / balls, 0 when balls = 0
    double boundary_rate = 0.0; // (fours + sixes) / innings, 0 when innings = 0
};

struct BowlingStats {
    int balls = 0;
    int runs_conceded = 0;
    int wickets = 0;
    double economy = 0.0;  // 6 * runs_conceded / balls, 0 when balls = 0
    // balls / wickets; empty is the wicketless WORST sentinel, which
    // normalization maps to the pool's minimum score.
    std::optional<double> strike_rate;
};

struct AllRounderDelta {
    double batting_average = 0.0;
    double bowling_average = 0.0;  // runs_conceded / wickets, needs wickets >= 1
    double delta = 0.0;            // batting_average - bowling_average; higher is better
};

using MatchWindow = std::vector<const MatchScorecard*>;

namespace detail {

inline void require_known_player(const MatchStore& store, const std::string& player_id) {
    if (!store.find_player(player_id)) throw Error("unknown player '" + player_id + "'");
}

}  // namespace detail

inline BattingStats batting_aggregate(const MatchStore& store, const std::string& player_id,
                                      const MatchWindow& matches,
                                      const PositionBands& bands = {}) {
    detail::require_known_player(store, player_id);
    BattingStats s;
    for (const MatchScorecard* m : matches) {
        for (const Innings& inn : m->innings) {
            for (const BattingEntry& e : inn.batting) {
                if (e.player_id != player_id) continue;
                s.innings += 1;
                s.runs += e.runs;
                s.balls += e.balls_faced;
                s.dismissals += e.dismissed ? 1 : 0;
                s.fours += e.fours;
                s.sixes += e.sixes;
                if (e.batting_position <= bands.opener_max)
                    s.opened_count += 1;
                else if (e.batting_position <= bands.middle_max)
                    s.middle_count += 1;
                else if (e.batting_position <= bands.lower_max)
                    s.lower_count += 1;
            }
        }
    }
    s.average = static_cast<double>(s.runs) / std::max(1, s.dismissals);
    s.strike_rate = s.balls > 0 ? 100.0 * s.runs / s.balls : 0.0;
    s.boundary_rate = s.innings > 0 ? static_cast<double>(s.fours + s.sixes) / s.innings : 0.0;
    return s;
}

inline BowlingStats bowling_aggregate(const MatchStore& store, const std::string& player_id,
                                      const MatchWindow& matches) {
    detail::require_known_player(store, player_id);
    BowlingStats s;
    for (const MatchScorecard* m : matches) {
        for (const Innings& inn : m->innings) {
            for (const BowlingEntry& e : inn.bowling) {
                if (e.player_id != player_id) continue;
                s.balls += e.balls_bowled;
                s.runs_conceded += e.runs_conceded;
                s.wickets += e.wickets;
            }
        }
    }
    s.economy = s.balls > 0 ? 6.0 * s.runs_conceded / s.balls : 0.0;
    if (s.wickets > 0) s.strike_rate = static_cast<double>(s.balls) / s.wickets;
    return s;
}

/// Defined only when the bowling average is (>= 1 wicket).
inline std::optional<AllRounderDelta> all_rounder_delta(const BattingStats& batting,
                                                        const BowlingStats& bowling) {
    if (bowling.wickets < 1) return std::nullopt;
    AllRounderDelta d;
    d.batting_average = batting.average;
    d.bowling_average = static_cast<double>(bowling.runs_conceded) / bowling.wickets;
    d.delta = d.batting_average - d.bowling_average;
    return d;
}

/// True iff the player has an entry in an international match dated within
/// [reference_date - 365 days, reference_date], both ends inclusive. Scans
/// the whole store, not a filtered window.
inline bool played_international_recent(const MatchStore& store, const std::string& player_id,
                                        Date reference_date) {
    detail::require_known_player(store, player_id);
    for (const MatchScorecard& m : store.matches()) {
        if (!m.is_international) continue;
        const long age = days_between(reference_date, m.date);
        if (age < 0 || age > 365) continue;
        for (const Innings& inn : m.innings) {
            for (const BattingEntry& e : inn.batting)
                if (e.player_id == player_id) return true;
            for (const BowlingEntry& e : inn.bowling)
                if (e.player_id == player_id) return true;
        }
    }
    return false;
}

}  // namespace squadrank
