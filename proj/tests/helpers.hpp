// Shared fixture builders, random generators, and a CLI process runner.
// Catch-free so the acceptance binary can use it too.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "squadrank/domain.hpp"
#include "squadrank/scorecard_io.hpp"
#include "squadrank/selection.hpp"
#include "squadrank/store.hpp"

namespace testutil {

namespace sq = squadrank;

inline sq::PlayerRecord player(const std::string& id, const std::string& name,
                               sq::BowlingStyle style = sq::BowlingStyle::none,
                               bool keeper = false) {
    return sq::PlayerRecord{id, name, style, keeper};
}

/// Small buildable scorecard for hand-written fixtures.
class MatchBuilder {
public:
    MatchBuilder(std::string match_id, const std::string& date, std::string competition = "DPL-2016",
                 bool international = false) {
        match_.match_id = std::move(match_id);
        match_.date = sq::parse_date(date);
        match_.competition = std::move(competition);
        match_.is_international = international;
    }

    MatchBuilder& bat(int innings, const std::string& id, int pos, int runs, int balls, int fours,
                      int sixes, bool dismissed) {
        match_.innings[innings].batting.push_back({id, pos, runs, balls, fours, sixes, dismissed});
        return *this;
    }

    MatchBuilder& bowl(int innings, const std::string& id, int balls, int conceded, int wickets) {
        match_.innings[innings].bowling.push_back({id, balls, conceded, wickets});
        return *this;
    }

    sq::MatchScorecard build() const { return match_; }

private:
    sq::MatchScorecard match_;
};

// ---------------------------------------------------------------------------
// Random valid stores
// ---------------------------------------------------------------------------

struct StoreGenOptions {
    int min_players = 5;
    int max_players = 12;
    int min_matches = 1;
    int max_matches = 8;
};

inline sq::MatchStore random_store(std::mt19937& rng, const StoreGenOptions& opt = {}) {
    auto rand_int = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    sq::MatchStore store;
    const int n_players = rand_int(opt.min_players, opt.max_players);
    std::vector<std::string> ids;
    std::vector<std::string> bowler_ids;
    for (int i = 0; i < n_players; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "p%02d", i);
        sq::PlayerRecord p;
        p.player_id = buf;
        p.display_name = std::string("Player ") + buf;
        const int style = rand_int(0, 5);
        // bias toward a usable mix of styles; at least two bowlers below
        p.bowling_style = style <= 1   ? sq::BowlingStyle::pace
                          : style == 2 ? sq::BowlingStyle::off_break
                          : style == 3 ? sq::BowlingStyle::leg_break
                          : style == 4 ? sq::BowlingStyle::slow_left_arm
                                       : sq::BowlingStyle::none;
        if (i < 2 && p.bowling_style == sq::BowlingStyle::none)
            p.bowling_style = sq::BowlingStyle::pace;
        p.is_wicketkeeper = rand_int(0, 4) == 0;
        store.add_player(p);
        ids.push_back(p.player_id);
        if (p.bowling_style != sq::BowlingStyle::none) bowler_ids.push_back(p.player_id);
    }

    const int n_matches = rand_int(opt.min_matches, opt.max_matches);
    const char* competitions[] = {"DPL-2014", "DPL-2015", "DPL-2016", "ODI-SERIES"};
    for (int i = 0; i < n_matches; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "m%03d", i);
        sq::MatchScorecard m;
        m.match_id = buf;
        m.date = sq::Date{std::chrono::year{rand_int(2014, 2016)},
                          std::chrono::month{static_cast<unsigned>(rand_int(1, 12))},
                          std::chrono::day{static_cast<unsigned>(rand_int(1, 28))}};
        m.competition = competitions[rand_int(0, 3)];
        m.is_international = rand_int(0, 3) == 0;
        for (auto& innings : m.innings) {
            std::vector<std::string> batters = ids;
            std::shuffle(batters.begin(), batters.end(), rng);
            const int n_bat = rand_int(0, std::min<int>(7, static_cast<int>(batters.size())));
            std::vector<int> positions(11);
            for (int p = 0; p < 11; ++p) positions[p] = p + 1;
            std::shuffle(positions.begin(), positions.end(), rng);
            for (int b = 0; b < n_bat; ++b) {
                sq::BattingEntry e;
                e.player_id = batters[b];
                e.batting_position = positions[b];
                e.runs = rand_int(0, 120);
                e.balls_faced = e.runs > 0 ? rand_int(1, 130) : rand_int(0, 12);
                e.fours = rand_int(0, e.runs / 4);
                e.sixes = rand_int(0, (e.runs - 4 * e.fours) / 6);
                e.dismissed = rand_int(0, 9) < 6;
                innings.batting.push_back(e);
            }
            std::vector<std::string> bowlers = bowler_ids;
            std::shuffle(bowlers.begin(), bowlers.end(), rng);
            const int n_bowl = rand_int(0, std::min<int>(4, static_cast<int>(bowlers.size())));
            for (int b = 0; b < n_bowl; ++b) {
                sq::BowlingEntry e;
                e.player_id = bowlers[b];
                e.balls_bowled = rand_int(6, 60);
                e.runs_conceded = rand_int(0, 2 * e.balls_bowled);
                e.wickets = rand_int(0, 5);
                innings.bowling.push_back(e);
            }
        }
        store.add_match(m);
    }
    return store;
}

// ---------------------------------------------------------------------------
// Random selection instances
//
// Built around a hidden seed assignment so every instance stays feasible
// even after the random overrides. Scores live on a quarter-point grid, so
// sums are exact in double arithmetic and optimum ties are exact ties.
// ---------------------------------------------------------------------------

struct SelectionInstance {
    sq::CategoryPools pools;
    sq::SquadTemplate tmpl;
    sq::Overrides overrides;
};

inline SelectionInstance random_selection_instance(std::mt19937& rng, int max_candidates = 20,
                                                   bool with_overrides = true) {
    auto rand_int = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto grid_score = [&] { return rand_int(0, 400) / 4.0; };

    std::vector<sq::RoleCategory> cats(sq::all_role_categories.begin(),
                                       sq::all_role_categories.end());
    std::shuffle(cats.begin(), cats.end(), rng);
    const int n_cats = rand_int(1, 4);
    cats.resize(n_cats);

    SelectionInstance inst;
    int total_quota = 0;
    for (sq::RoleCategory cat : cats) inst.tmpl.quota[cat] = 1;
    total_quota = n_cats;
    for (int extra = rand_int(0, 6 - n_cats); extra > 0; --extra) {
        inst.tmpl.quota[cats[rand_int(0, n_cats - 1)]] += 1;
        total_quota += 1;
    }

    const int n_candidates = rand_int(total_quota, max_candidates);
    std::vector<std::string> ids;
    for (int i = 0; i < n_candidates; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "c%02d", i);
        ids.push_back(buf);
    }
    std::vector<std::string> shuffled = ids;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);

    // seed assignment: the first total_quota shuffled candidates, one per slot
    std::map<std::string, std::map<sq::RoleCategory, double>> membership;
    std::vector<std::pair<std::string, sq::RoleCategory>> seed_slots;
    int next = 0;
    for (sq::RoleCategory cat : cats)
        for (int q = 0; q < inst.tmpl.quota[cat]; ++q) {
            membership[shuffled[next]][cat] = grid_score();
            seed_slots.emplace_back(shuffled[next], cat);
            ++next;
        }
    for (const std::string& id : ids)
        for (sq::RoleCategory cat : cats)
            if (!membership[id].count(cat) && rand_int(0, 99) < 35)
                membership[id][cat] = grid_score();

    for (const auto& [id, cats_of] : membership)
        for (const auto& [cat, score] : cats_of) inst.pools[cat].push_back({id, score});

    if (with_overrides) {
        if (rand_int(0, 99) < 40) {
            // exclude up to two candidates outside the seed assignment
            std::set<std::string> seeded;
            for (const auto& [id, cat] : seed_slots) seeded.insert(id);
            for (int tries = rand_int(1, 2); tries > 0; --tries) {
                const std::string& id = ids[rand_int(0, n_candidates - 1)];
                if (!seeded.count(id)) inst.overrides.exclude.insert(id);
            }
        }
        if (rand_int(0, 99) < 40) {
            // force up to two seed slots, preserving feasibility
            std::shuffle(seed_slots.begin(), seed_slots.end(), rng);
            const int n_forced = rand_int(1, std::min<int>(2, seed_slots.size()));
            for (int f = 0; f < n_forced; ++f)
                inst.overrides.force_include.push_back(seed_slots[f]);
        }
        for (const std::string& id : ids)
            if (rand_int(0, 99) < 10) inst.overrides.wildcards.insert(id);
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Temp files and process running
// ---------------------------------------------------------------------------

inline std::filesystem::path fresh_temp_dir(const std::string& tag) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path() /
               ("squadrank_" + tag + "_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& arg) {
    std::string quoted = "'";
    for (char c : arg) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted.push_back(c);
    }
    quoted += "'";
    return quoted;
}

inline CliResult run_cli(const std::string& exe, const std::vector<std::string>& args) {
    auto dir = fresh_temp_dir("cli");
    const auto out_path = dir / "stdout";
    const auto err_path = dir / "stderr";
    std::string cmd = shell_quote(exe);
    for (const std::string& a : args) cmd += " " + shell_quote(a);
    cmd += " > " + shell_quote(out_path.string()) + " 2> " + shell_quote(err_path.string());
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    std::filesystem::remove_all(dir);
    return result;
}

}  // namespace testutil
