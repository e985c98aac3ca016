#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "squadrank/aggregate.hpp"
#include "squadrank/domain.hpp"
#include "squadrank/store.hpp"

namespace squadrank {

// ---------------------------------------------------------------------------
// Pool-relative min-max normalization
// ---------------------------------------------------------------------------

enum class Orientation { higher_better, lower_better };

/// Maps a pool of raw values onto [0, weight]: best -> weight, worst -> 0,
/// linear in between. Empty optionals are WORST sentinels and score 0. When
/// every real value in the pool is equal, each scores weight / 2.
inline std::vector<double> normalize(const std::vector<std::optional<double>>& values,
                                     Orientation orientation, double weight) {
    if (values.empty()) throw Error("normalize: empty pool");
    if (!(weight > 0)) throw Error("normalize: weight must be positive");

    double lo = 0.0, hi = 0.0;
    bool seen = false;
    for (const auto& v : values) {
        if (!v) continue;
        if (!seen) {
            lo = hi = *v;
            seen = true;
        } else {
            lo = std::min(lo, *v);
            hi = std::max(hi, *v);
        }
    }

    std::vector<double> scores(values.size(), 0.0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i]) continue;  // sentinel -> pool minimum
        if (hi == lo) {
            scores[i] = weight / 2;
        } else if (orientation == Orientation::higher_better) {
            scores[i] = weight * (*values[i] - lo) / (hi - lo);
        } else {
            scores[i] = weight * (hi - *values[i]) / (hi - lo);
        }
    }
    return scores;
}

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

struct RatingWeights {
    double opener_average = 50.0;
    double opener_strike_rate = 50.0;
    double middle_average = 70.0;  // "more priority in average rather than strike rate"
    double middle_strike_rate = 30.0;
    double lower_strike_rate = 60.0;
    double lower_boundary_rate = 40.0;
    double bowler_economy = 50.0;
    double bowler_strike_rate = 50.0;
    double all_rounder_delta = 100.0;
};

struct EligibilityThresholds {
    int min_innings_bat = 3;
    int min_balls_bowled = 60;
};

struct RatingConfig {
    RatingWeights weights;
    EligibilityThresholds thresholds;
    PositionBands bands;
    double bonus_multiplier = 1.10;  // recent-international and part-time-bowler bonus
};

inline constexpr double rating_cap = 100.0;

// ---------------------------------------------------------------------------
// Rating points
// ---------------------------------------------------------------------------

struct RatingComponent {
    std::string term;
    std::optional<double> raw;  // empty for a sentinel input
    double contribution;        // normalized, in [0, weight]
};

struct RatingPoint {
    std::string player_id;
    RoleCategory category{};
    double score = 0.0;
    std::vector<RatingComponent> components;
    bool bonus_applied = false;
    double bonus_multiplier = 1.0;
};

/// score from first principles: sum the contributions, apply the bonus
/// multiplier, cap. The stored score must always equal this within 1e-9.
inline double recompute_score(const RatingPoint& point) {
    double sum = 0.0;
    for (const RatingComponent& c : point.components) sum += c.contribution;
    if (point.bonus_applied) sum *= point.bonus_multiplier;
    return std::min(rating_cap, sum);
}

namespace detail {

inline void sort_ranked(std::vector<RatingPoint>& points) {
    std::sort(points.begin(), points.end(), [](const RatingPoint& a, const RatingPoint& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.player_id < b.player_id;
    });
}

/// Two-term scheme shared by every batting/bowling category: normalize each
/// term over the pool, sum, optionally apply the bonus multiplier, cap.
struct TermInput {
    std::string name;
    std::vector<std::optional<double>> raw;
    Orientation orientation;
    double weight;
};

inline std::vector<RatingPoint> rate_pool(const std::vector<std::string>& ids,
                                          RoleCategory category,
                                          const std::vector<TermInput>& terms,
                                          const std::set<std::string>& bonus_players,
                                          double bonus_multiplier) {
    std::vector<RatingPoint> out;
    if (ids.empty()) return out;

    std::vector<std::vector<double>> normalized;
    normalized.reserve(terms.size());
    for (const TermInput& t : terms)
        normalized.push_back(normalize(t.raw, t.orientation, t.weight));

    out.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        RatingPoint p;
        p.player_id = ids[i];
        p.category = category;
        double sum = 0.0;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            p.components.push_back({terms[t].name, terms[t].raw[i], normalized[t][i]});
            sum += normalized[t][i];
        }
        if (bonus_players.count(p.player_id)) {
            p.bonus_applied = true;
            p.bonus_multiplier = bonus_multiplier;
            sum *= bonus_multiplier;
        }
        p.score = std::min(rating_cap, sum);
        out.push_back(std::move(p));
    }
    sort_ranked(out);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Category schemes. Each takes an eligibility-filtered pool and returns the
// ranked rating list (score descending, player_id breaking ties).
// ---------------------------------------------------------------------------

using BowlingPool = std::vector<std::pair<std::string, BowlingStats>>;
using BattingPool = std::vector<std::pair<std::string, BattingStats>>;
using DeltaPool = std::vector<std::pair<std::string, AllRounderDelta>>;

namespace detail {

inline std::vector<RatingPoint> rate_bowling_pool(const BowlingPool& pool, RoleCategory category,
                                                  const std::set<std::string>& internationals,
                                                  const RatingConfig& config) {
    std::vector<std::string> ids;
    TermInput economy{"economy", {}, Orientation::lower_better, config.weights.bowler_economy};
    TermInput strike{"strike_rate", {}, Orientation::lower_better,
                     config.weights.bowler_strike_rate};
    for (const auto& [id, stats] : pool) {
        ids.push_back(id);
        economy.raw.emplace_back(stats.economy);
        strike.raw.push_back(stats.strike_rate);  // may be the wicketless sentinel
    }
    return rate_pool(ids, category, {economy, strike}, internationals, config.bonus_multiplier);
}

inline std::vector<RatingPoint> rate_average_sr_pool(const BattingPool& pool,
                                                     RoleCategory category, double average_weight,
                                                     double strike_rate_weight) {
    std::vector<std::string> ids;
    TermInput average{"average", {}, Orientation::higher_better, average_weight};
    TermInput strike{"strike_rate", {}, Orientation::higher_better, strike_rate_weight};
    for (const auto& [id, stats] : pool) {
        ids.push_back(id);
        average.raw.emplace_back(stats.average);
        strike.raw.emplace_back(stats.strike_rate);
    }
    return rate_pool(ids, category, {average, strike}, {}, 1.0);
}

}  // namespace detail

/// 50 on economy, 50 on strike rate; x1.10 (capped) for a recent international.
inline std::vector<RatingPoint> rate_pacers(const BowlingPool& pool,
                                            const std::set<std::string>& recent_internationals,
                                            const RatingConfig& config = {}) {
    return detail::rate_bowling_pool(pool, RoleCategory::pacer, recent_internationals, config);
}

/// Same scheme as pacers, normalized over the spinner pool alone.
inline std::vector<RatingPoint> rate_spinners(const BowlingPool& pool,
                                              const std::set<std::string>& recent_internationals,
                                              const RatingConfig& config = {}) {
    return detail::rate_bowling_pool(pool, RoleCategory::spinner, recent_internationals, config);
}

inline std::vector<RatingPoint> rate_openers(const BattingPool& pool,
                                             const RatingConfig& config = {}) {
    return detail::rate_average_sr_pool(pool, RoleCategory::opener, config.weights.opener_average,
                                        config.weights.opener_strike_rate);
}

inline std::vector<RatingPoint> rate_middle_order(const BattingPool& pool,
                                                  const RatingConfig& config = {}) {
    return detail::rate_average_sr_pool(pool, RoleCategory::middle_order,
                                        config.weights.middle_average,
                                        config.weights.middle_strike_rate);
}

/// Strike rate and boundaries decide; part-time bowlers get the x1.10 bonus.
inline std::vector<RatingPoint> rate_lower_order(const BattingPool& pool,
                                                 const std::set<std::string>& part_time_bowlers,
                                                 const RatingConfig& config = {}) {
    std::vector<std::string> ids;
    detail::TermInput strike{"strike_rate", {}, Orientation::higher_better,
                             config.weights.lower_strike_rate};
    detail::TermInput boundary{"boundary_rate", {}, Orientation::higher_better,
                               config.weights.lower_boundary_rate};
    for (const auto& [id, stats] : pool) {
        ids.push_back(id);
        strike.raw.emplace_back(stats.strike_rate);
        boundary.raw.emplace_back(stats.boundary_rate);
    }
    return detail::rate_pool(ids, RoleCategory::lower_order, {strike, boundary},
                             part_time_bowlers, config.bonus_multiplier);
}

/// Batting-minus-bowling-average difference, converted to the 0-100 scale.
inline std::vector<RatingPoint> rate_all_rounders(const DeltaPool& pool,
                                                  const RatingConfig& config = {}) {
    std::vector<std::string> ids;
    detail::TermInput delta{"delta", {}, Orientation::higher_better,
                            config.weights.all_rounder_delta};
    for (const auto& [id, d] : pool) {
        ids.push_back(id);
        delta.raw.emplace_back(d.delta);
    }
    return detail::rate_pool(ids, RoleCategory::all_rounder, {delta}, {}, 1.0);
}

/// Keepers are ranked by the middle-order scheme over the keeper pool.
inline std::vector<RatingPoint> rate_keepers(const BattingPool& pool,
                                             const RatingConfig& config = {}) {
    return detail::rate_average_sr_pool(pool, RoleCategory::wicketkeeper,
                                        config.weights.middle_average,
                                        config.weights.middle_strike_rate);
}

// ---------------------------------------------------------------------------
// Role classification
// ---------------------------------------------------------------------------

struct RoleProfile {
    std::string player_id;
    std::set<RoleCategory> roles;
    std::map<RoleCategory, std::string> evidence;
};

/// Per-player window statistics plus the eligibility verdicts derived from
/// them; the input every pool builder shares.
struct PlayerWindowStats {
    std::string player_id;
    BattingStats batting;
    BowlingStats bowling;
    bool wildcard = false;  // numeric thresholds waived
};

namespace detail {

inline std::string count_noun(int n, const char* noun) {
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

}  // namespace detail

/// Deterministic eligibility sets. Wildcard players bypass the numeric
/// thresholds (min innings / min balls) but still need positional or style
/// evidence, and a defined bowling average for the all-rounder role.
/// The innings threshold counts only innings inside the rated bands
/// (positions 1..lower_max): tail-end batting never qualifies a player for
/// a batting or all-rounder role.
inline RoleProfile classify_player(const PlayerRecord& player, const PlayerWindowStats& stats,
                                   const RatingConfig& config = {}) {
    const EligibilityThresholds& t = config.thresholds;
    RoleProfile profile;
    profile.player_id = player.player_id;

    const int banded_innings =
        stats.batting.opened_count + stats.batting.middle_count + stats.batting.lower_count;
    const bool enough_innings = stats.wildcard || banded_innings >= t.min_innings_bat;
    const bool enough_balls = stats.wildcard || stats.bowling.balls >= t.min_balls_bowled;

    const bool lower_eligible = enough_innings && stats.batting.lower_count >= 1;
    if (lower_eligible) {
        profile.roles.insert(RoleCategory::lower_order);
        profile.evidence[RoleCategory::lower_order] =
            detail::count_noun(stats.batting.lower_count, "innings") + " at positions " +
            std::to_string(config.bands.middle_max + 1) + "-" +
            std::to_string(config.bands.lower_max);
    }
    if (enough_innings && stats.batting.opened_count >= 1) {
        profile.roles.insert(RoleCategory::opener);
        profile.evidence[RoleCategory::opener] =
            "opened " + detail::count_noun(stats.batting.opened_count, "innings");
    } else if (lower_eligible && stats.batting.strike_rate > 100.0) {
        profile.roles.insert(RoleCategory::opener);
        profile.evidence[RoleCategory::opener] =
            "lower-order batsman with strike rate over 100";
    }
    if (enough_innings && stats.batting.middle_count >= 1) {
        profile.roles.insert(RoleCategory::middle_order);
        profile.evidence[RoleCategory::middle_order] =
            detail::count_noun(stats.batting.middle_count, "innings") + " at positions " +
            std::to_string(config.bands.opener_max + 1) + "-" +
            std::to_string(config.bands.middle_max);
    }
    if (player.is_wicketkeeper && enough_innings && banded_innings >= 1) {
        profile.roles.insert(RoleCategory::wicketkeeper);
        profile.evidence[RoleCategory::wicketkeeper] = "designated wicketkeeper";
    }
    if (player.bowling_style == BowlingStyle::pace && enough_balls && stats.bowling.balls > 0) {
        profile.roles.insert(RoleCategory::pacer);
        profile.evidence[RoleCategory::pacer] =
            "pace, " + detail::count_noun(stats.bowling.balls, "ball") + " bowled";
    }
    if (is_spin_style(player.bowling_style) && enough_balls && stats.bowling.balls > 0) {
        profile.roles.insert(RoleCategory::spinner);
        profile.evidence[RoleCategory::spinner] = std::string(to_string(player.bowling_style)) +
                                                  ", " +
                                                  detail::count_noun(stats.bowling.balls, "ball") +
                                                  " bowled";
    }
    if (enough_innings && banded_innings >= 1 && enough_balls && stats.bowling.balls > 0 &&
        stats.bowling.wickets >= 1) {
        profile.roles.insert(RoleCategory::all_rounder);
        profile.evidence[RoleCategory::all_rounder] =
            detail::count_noun(stats.batting.innings, "innings") + ", " +
            detail::count_noun(stats.bowling.wickets, "wicket");
    }
    return profile;
}

// ---------------------------------------------------------------------------
// Pipeline: store + window -> rated category lists
// ---------------------------------------------------------------------------

struct RatingResult {
    std::vector<RatingPoint> points;
    std::vector<std::string> warnings;
};

class RatingPipeline {
public:
    RatingPipeline(const MatchStore& store, MatchWindow window, Date reference_date,
                   RatingConfig config = {}, std::set<std::string> wildcards = {})
        : store_(store),
          window_(std::move(window)),
          reference_date_(reference_date),
          config_(std::move(config)),
          wildcards_(std::move(wildcards)) {
        for (const auto& [id, player] : store.players()) {
            PlayerWindowStats s;
            s.player_id = id;
            s.batting = batting_aggregate(store, id, window_, config_.bands);
            s.bowling = bowling_aggregate(store, id, window_);
            s.wildcard = wildcards_.count(id) > 0;
            stats_.emplace(id, std::move(s));
        }
    }

    const PlayerWindowStats& stats(const std::string& player_id) const {
        auto it = stats_.find(player_id);
        if (it == stats_.end()) throw Error("unknown player '" + player_id + "'");
        return it->second;
    }

    std::map<std::string, RoleProfile> classify_all() const {
        std::map<std::string, RoleProfile> out;
        for (const auto& [id, player] : store_.players())
            out.emplace(id, classify_player(player, stats_.at(id), config_));
        return out;
    }

    RatingResult rate_category(RoleCategory category) const {
        RatingResult result;
        std::vector<std::string> members;
        for (const auto& [id, player] : store_.players()) {
            RoleProfile profile = classify_player(player, stats_.at(id), config_);
            if (profile.roles.count(category)) members.push_back(id);
        }
        warn_below_threshold(category, members, result.warnings);

        switch (category) {
            case RoleCategory::pacer:
                result.points =
                    rate_pacers(bowling_pool(members), recent_internationals(members), config_);
                break;
            case RoleCategory::spinner:
                result.points =
                    rate_spinners(bowling_pool(members), recent_internationals(members), config_);
                break;
            case RoleCategory::opener:
                result.points = rate_openers(batting_pool(members), config_);
                break;
            case RoleCategory::middle_order:
                result.points = rate_middle_order(batting_pool(members), config_);
                break;
            case RoleCategory::lower_order:
                result.points =
                    rate_lower_order(batting_pool(members), part_time_bowlers(members), config_);
                break;
            case RoleCategory::wicketkeeper:
                result.points = rate_keepers(batting_pool(members), config_);
                break;
            case RoleCategory::all_rounder: {
                DeltaPool pool;
                for (const std::string& id : members) {
                    const PlayerWindowStats& s = stats_.at(id);
                    if (auto d = all_rounder_delta(s.batting, s.bowling))
                        pool.emplace_back(id, *d);
                }
                result.points = rate_all_rounders(pool, config_);
                break;
            }
        }
        return result;
    }

    const RatingConfig& config() const { return config_; }
    const MatchWindow& window() const { return window_; }
    Date reference_date() const { return reference_date_; }

private:
    BattingPool batting_pool(const std::vector<std::string>& members) const {
        BattingPool pool;
        for (const std::string& id : members) pool.emplace_back(id, stats_.at(id).batting);
        return pool;
    }

    BowlingPool bowling_pool(const std::vector<std::string>& members) const {
        BowlingPool pool;
        for (const std::string& id : members) pool.emplace_back(id, stats_.at(id).bowling);
        return pool;
    }

    std::set<std::string> recent_internationals(const std::vector<std::string>& members) const {
        std::set<std::string> out;
        for (const std::string& id : members)
            if (played_international_recent(store_, id, reference_date_)) out.insert(id);
        return out;
    }

    std::set<std::string> part_time_bowlers(const std::vector<std::string>& members) const {
        std::set<std::string> out;
        for (const std::string& id : members) {
            const PlayerWindowStats& s = stats_.at(id);
            const PlayerRecord* player = store_.find_player(id);
            if (player && player->bowling_style != BowlingStyle::none && s.bowling.balls > 0)
                out.insert(id);
        }
        return out;
    }

    void warn_below_threshold(RoleCategory category, const std::vector<std::string>& members,
                              std::vector<std::string>& warnings) const {
        const bool batting_category =
            category == RoleCategory::opener || category == RoleCategory::middle_order ||
            category == RoleCategory::lower_order || category == RoleCategory::wicketkeeper ||
            category == RoleCategory::all_rounder;
        for (const std::string& id : members) {
            const PlayerWindowStats& s = stats_.at(id);
            if (!s.wildcard) continue;
            if (batting_category && s.batting.innings < config_.thresholds.min_innings_bat)
                warnings.push_back("wildcard " + id + " rated from " +
                                   detail::count_noun(s.batting.innings, "innings") +
                                   " (threshold " +
                                   std::to_string(config_.thresholds.min_innings_bat) + ")");
            const bool bowling_category = category == RoleCategory::pacer ||
                                          category == RoleCategory::spinner ||
                                          category == RoleCategory::all_rounder;
            if (bowling_category && s.bowling.balls < config_.thresholds.min_balls_bowled)
                warnings.push_back("wildcard " + id + " rated from " +
                                   detail::count_noun(s.bowling.balls, "ball") + " (threshold " +
                                   std::to_string(config_.thresholds.min_balls_bowled) + ")");
        }
    }

    const MatchStore& store_;
    MatchWindow window_;
    Date reference_date_;
    RatingConfig config_;
    std::set<std::string> wildcards_;
    std::map<std::string, PlayerWindowStats> stats_;
};

}  // namespace squadrank
