#pragma once

#include <array>
#include <chrono>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace squadrank {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse or validation failure with a locus (file line or document path).
class ParseError : public Error {
public:
    ParseError(std::string locus, const std::string& msg)
        : Error(locus.empty() ? msg : locus + ": " + msg), locus_(std::move(locus)) {}

    const std::string& locus() const { return locus_; }

private:
    std::string locus_;
};

// ---------------------------------------------------------------------------
// Dates
// ---------------------------------------------------------------------------

using Date = std::chrono::year_month_day;

inline std::optional<Date> try_parse_date(std::string_view text) {
    int y = 0, m = 0, d = 0;
    char dash1 = 0, dash2 = 0;
    if (std::sscanf(std::string(text).c_str(), "%d%c%d%c%d", &y, &dash1, &m, &dash2, &d) != 5)
        return std::nullopt;
    if (dash1 != '-' || dash2 != '-') return std::nullopt;
    Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
              std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok()) return std::nullopt;
    return date;
}

inline Date parse_date(std::string_view text) {
    auto date = try_parse_date(text);
    if (!date) throw Error("invalid date '" + std::string(text) + "', expected YYYY-MM-DD");
    return *date;
}

inline std::string format_date(Date date) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

/// Signed day count, positive when `a` is after `b`.
inline long days_between(Date a, Date b) {
    return (std::chrono::sys_days{a} - std::chrono::sys_days{b}).count();
}

// ---------------------------------------------------------------------------
// Roles and bowling styles
// ---------------------------------------------------------------------------

enum class BowlingStyle { pace, off_break, leg_break, slow_left_arm, none };

constexpr bool is_spin_style(BowlingStyle s) {
    return s == BowlingStyle::off_break || s == BowlingStyle::leg_break ||
           s == BowlingStyle::slow_left_arm;
}

inline std::string_view to_string(BowlingStyle s) {
    switch (s) {
        case BowlingStyle::pace: return "pace";
        case BowlingStyle::off_break: return "off-break";
        case BowlingStyle::leg_break: return "leg-break";
        case BowlingStyle::slow_left_arm: return "slow-left-arm";
        case BowlingStyle::none: return "none";
    }
    return "none";
}

inline std::optional<BowlingStyle> parse_bowling_style(std::string_view text) {
    if (text == "pace") return BowlingStyle::pace;
    if (text == "off-break") return BowlingStyle::off_break;
    if (text == "leg-break") return BowlingStyle::leg_break;
    if (text == "slow-left-arm") return BowlingStyle::slow_left_arm;
    if (text == "none") return BowlingStyle::none;
    return std::nullopt;
}

enum class RoleCategory {
    opener,
    middle_order,
    lower_order,
    wicketkeeper,
    spinner,
    pacer,
    all_rounder,
};

inline constexpr std::array<RoleCategory, 7> all_role_categories = {
    RoleCategory::opener,      RoleCategory::middle_order, RoleCategory::lower_order,
    RoleCategory::wicketkeeper, RoleCategory::spinner,      RoleCategory::pacer,
    RoleCategory::all_rounder,
};

inline std::string_view to_string(RoleCategory c) {
    switch (c) {
        case RoleCategory::opener: return "opener";
        case RoleCategory::middle_order: return "middle_order";
        case RoleCategory::lower_order: return "lower_order";
        case RoleCategory::wicketkeeper: return "wicketkeeper";
        case RoleCategory::spinner: return "spinner";
        case RoleCategory::pacer: return "pacer";
        case RoleCategory::all_rounder: return "all_rounder";
    }
    return "";
}

/// Accepts canonical names plus the short aliases the CLI documents.
inline std::optional<RoleCategory> parse_role_category(std::string_view text) {
    if (text == "opener" || text == "openers") return RoleCategory::opener;
    if (text == "middle_order" || text == "middle") return RoleCategory::middle_order;
    if (text == "lower_order" || text == "lower") return RoleCategory::lower_order;
    if (text == "wicketkeeper" || text == "keeper") return RoleCategory::wicketkeeper;
    if (text == "spinner" || text == "spinners") return RoleCategory::spinner;
    if (text == "pacer" || text == "pacers") return RoleCategory::pacer;
    if (text == "all_rounder" || text == "allrounder" || text == "allrounders")
        return RoleCategory::all_rounder;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Scorecard records
// ---------------------------------------------------------------------------

struct PlayerRecord {
    std::string player_id;
    std::string display_name;
    BowlingStyle bowling_style = BowlingStyle::none;
    bool is_wicketkeeper = false;

    bool operator==(const PlayerRecord&) const = default;
};

struct BattingEntry {
    std::string player_id;
    int batting_position = 0;  // 1..11
    int runs = 0;
    int balls_faced = 0;
    int fours = 0;
    int sixes = 0;
    bool dismissed = false;

    bool operator==(const BattingEntry&) const = default;
};

struct BowlingEntry {
    std::string player_id;
    int balls_bowled = 0;  // legal deliveries
    int runs_conceded = 0;
    int wickets = 0;

    bool operator==(const BowlingEntry&) const = default;
};

struct Innings {
    std::vector<BattingEntry> batting;
    std::vector<BowlingEntry> bowling;

    bool operator==(const Innings&) const = default;
};

struct MatchScorecard {
    std::string match_id;
    Date date{};
    std::string competition;
    bool is_international = false;
    std::array<Innings, 2> innings;

    bool operator==(const MatchScorecard&) const = default;
};

}  // namespace squadrank
