// squadrank: scorecard ingestion, role ratings, and squad selection.
//
// Data goes to stdout; diagnostics (config echo, warnings, errors) go to
// stderr. The exit code is nonzero exactly when an error was reported.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "squadrank/aggregate.hpp"
#include "squadrank/config.hpp"
#include "squadrank/domain.hpp"
#include "squadrank/format.hpp"
#include "squadrank/rating.hpp"
#include "squadrank/scorecard_io.hpp"
#include "squadrank/selection.hpp"
#include "squadrank/store.hpp"

namespace sq = squadrank;

namespace {

struct RunConfig {
    std::string store_path;
    std::string config_path;
    std::string format_name = "table";
    std::string reference_date;
    std::string competitions;  // comma separated
    std::string from_date;
    std::string to_date;

    sq::OutputFormat format() const {
        auto f = sq::parse_output_format(format_name);
        if (!f) throw sq::Error("unknown format '" + format_name + "'");
        return *f;
    }

    sq::RatingConfig rating_config() const {
        return config_path.empty() ? sq::RatingConfig{} : sq::load_rating_config(config_path);
    }

    sq::MatchStore load_store() const {
        if (store_path.empty()) throw sq::Error("--store is required for this command");
        return sq::load_store(store_path);
    }

    sq::MatchStore::Filter filter() const {
        sq::MatchStore::Filter f;
        if (!competitions.empty()) {
            std::istringstream in(competitions);
            std::string item;
            while (std::getline(in, item, ','))
                if (!item.empty()) f.competitions.insert(item);
        }
        if (!from_date.empty()) f.from = sq::parse_date(from_date);
        if (!to_date.empty()) f.to = sq::parse_date(to_date);
        return f;
    }

    sq::Date resolve_reference_date(const sq::MatchStore& store) const {
        if (!reference_date.empty()) {
            sq::Date d = sq::parse_date(reference_date);
            std::cerr << "reference date: " << sq::format_date(d) << " (from flag)\n";
            return d;
        }
        if (store.reference_date()) {
            std::cerr << "reference date: " << sq::format_date(*store.reference_date())
                      << " (store configuration)\n";
            return *store.reference_date();
        }
        sq::Date d = store.effective_reference_date();
        std::cerr << "reference date: " << sq::format_date(d) << " (latest match in store)\n";
        return d;
    }
};

void echo_config(const sq::RatingConfig& config) {
    std::cerr << "config: " << sq::rating_config_to_json(config).dump() << "\n";
}

sq::RatingPipeline make_pipeline(const RunConfig& run, const sq::MatchStore& store,
                                 const sq::RatingConfig& config,
                                 const std::set<std::string>& wildcards = {}) {
    sq::MatchWindow window = store.query(run.filter());
    std::cerr << "window: " << window.size() << " of " << store.match_count() << " matches\n";
    return sq::RatingPipeline(store, std::move(window), run.resolve_reference_date(store), config,
                              wildcards);
}

int cmd_import(const RunConfig& run, const std::vector<std::string>& paths) {
    if (run.store_path.empty()) throw sq::Error("--store is required for import");
    sq::MatchStore store;
    if (std::filesystem::exists(run.store_path)) store = sq::load_store(run.store_path);

    int failures = 0;
    int total_matches = 0;
    int ok_files = 0;
    for (const std::string& path : paths) {
        try {
            std::ifstream in(path);
            if (!in) throw sq::Error("cannot read file '" + path + "'");
            int added = sq::import_scorecards(store, in);
            total_matches += added;
            ok_files += 1;
            std::cout << path << ": " << added << " matches\n";
        } catch (const std::exception& e) {
            std::cerr << "error: " << path << ": " << e.what() << "\n";
            failures += 1;
        }
    }
    if (!run.reference_date.empty()) store.set_reference_date(sq::parse_date(run.reference_date));
    sq::save_store(store, run.store_path);
    std::cout << ok_files << " files, " << total_matches << " matches\n";
    return failures == 0 ? 0 : 1;
}

int cmd_stats(const RunConfig& run, const std::string& player_id) {
    sq::MatchStore store = run.load_store();
    const sq::PlayerRecord* player = store.find_player(player_id);
    if (!player) throw sq::Error("unknown player '" + player_id + "'");
    sq::RatingConfig config = run.rating_config();
    echo_config(config);
    sq::MatchWindow window = store.query(run.filter());
    std::cerr << "window: " << window.size() << " of " << store.match_count() << " matches\n";
    sq::Date reference = run.resolve_reference_date(store);
    sq::BattingStats batting = sq::batting_aggregate(store, player_id, window, config.bands);
    sq::BowlingStats bowling = sq::bowling_aggregate(store, player_id, window);
    bool recent = sq::played_international_recent(store, player_id, reference);
    std::cout << sq::render_stats(*player, batting, bowling, recent, run.format());
    return 0;
}

int cmd_rate(const RunConfig& run, const std::string& category_name) {
    auto category = sq::parse_role_category(category_name);
    if (!category) throw sq::Error("unknown category '" + category_name + "'");
    sq::MatchStore store = run.load_store();
    sq::RatingConfig config = run.rating_config();
    echo_config(config);
    sq::RatingPipeline pipeline = make_pipeline(run, store, config);
    sq::RatingResult result = pipeline.rate_category(*category);
    for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
    if (result.points.empty())
        std::cerr << "warning: no eligible players for category " << sq::to_string(*category)
                  << "\n";
    std::cout << sq::render_ratings(result.points, sq::store_names(store), run.format());
    return 0;
}

struct SelectFlags {
    std::string template_name = "default";
    std::string rated_path;
    std::string compare_path;
    std::string strategy = "exact";
    std::vector<std::string> includes;
    std::vector<std::string> excludes;
    std::vector<std::string> wildcards;
};

int cmd_select(const RunConfig& run, const SelectFlags& flags) {
    sq::RatingConfig config = run.rating_config();
    echo_config(config);

    sq::SquadTemplate tmpl = sq::resolve_template(flags.template_name);
    sq::Overrides overrides;
    for (const std::string& spec : flags.includes)
        overrides.force_include.push_back(sq::parse_include_spec(spec));
    overrides.exclude.insert(flags.excludes.begin(), flags.excludes.end());
    overrides.wildcards.insert(flags.wildcards.begin(), flags.wildcards.end());

    std::optional<sq::MatchStore> store;
    sq::CategoryPools pools;
    if (!flags.rated_path.empty()) {
        pools = sq::load_rated_pools(flags.rated_path);
        if (!run.store_path.empty()) store = run.load_store();
    } else {
        store = run.load_store();
        sq::RatingPipeline pipeline = make_pipeline(run, *store, config, overrides.wildcards);
        std::map<sq::RoleCategory, std::vector<sq::RatingPoint>> rated;
        for (const auto& [cat, quota] : tmpl.quota) {
            if (quota <= 0) continue;
            sq::RatingResult result = pipeline.rate_category(cat);
            for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
            rated[cat] = std::move(result.points);
        }
        pools = sq::pools_from_ratings(rated);
    }

    std::vector<std::string> warnings;
    sq::Squad squad;
    if (flags.strategy == "exact") {
        squad = sq::select_squad(pools, tmpl, overrides, &warnings);
    } else if (flags.strategy == "greedy") {
        squad = sq::greedy_select_squad(pools, tmpl, overrides);
    } else {
        throw sq::Error("unknown strategy '" + flags.strategy + "' (expected exact or greedy)");
    }
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

    sq::NameLookup names = store ? sq::store_names(*store) : sq::identity_names();
    std::cout << sq::render_squad(squad, names, run.format());

    if (!flags.compare_path.empty()) {
        std::vector<std::string> other = sq::load_name_list(flags.compare_path);
        std::vector<std::string> ours;
        for (const sq::SquadSlot& slot : squad.slots) ours.push_back(names(slot.player_id));
        sq::CompareReport report = sq::compare_squads(ours, other);
        std::cout << sq::render_compare(report, run.format());
    }
    return 0;
}

int cmd_compare(const RunConfig& run, const std::string& path_a, const std::string& path_b) {
    std::vector<std::string> a = sq::load_name_list(path_a);
    std::vector<std::string> b = sq::load_name_list(path_b);
    sq::CompareReport report = sq::compare_squads(a, b);
    std::cout << sq::render_compare(report, run.format());
    return 0;
}

int cmd_plotdata(const RunConfig& run, const std::string& figure) {
    sq::MatchStore store = run.load_store();
    sq::RatingConfig config = run.rating_config();
    echo_config(config);
    sq::RatingPipeline pipeline = make_pipeline(run, store, config);

    std::map<std::string, sq::RoleProfile> profiles = pipeline.classify_all();
    std::vector<sq::PlotPoint> points;
    if (figure == "spinners") {
        for (const auto& [id, profile] : profiles) {
            if (!profile.roles.count(sq::RoleCategory::spinner)) continue;
            const sq::BowlingStats& s = pipeline.stats(id).bowling;
            points.push_back({id, {{"economy", s.economy}, {"strike_rate", s.strike_rate}}});
        }
    } else if (figure == "openers") {
        for (const auto& [id, profile] : profiles) {
            if (!profile.roles.count(sq::RoleCategory::opener)) continue;
            const sq::BattingStats& s = pipeline.stats(id).batting;
            points.push_back({id, {{"strike_rate", s.strike_rate}, {"average", s.average}}});
        }
    } else if (figure == "allrounders") {
        for (const auto& [id, profile] : profiles) {
            if (!profile.roles.count(sq::RoleCategory::all_rounder)) continue;
            const sq::PlayerWindowStats& s = pipeline.stats(id);
            auto delta = sq::all_rounder_delta(s.batting, s.bowling);
            if (delta) points.push_back({id, {{"delta", delta->delta}}});
        }
    } else {
        throw sq::Error("unknown figure '" + figure + "' (expected spinners, openers, or allrounders)");
    }
    std::cout << sq::render_plotdata(points, sq::store_names(store), run.format());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cricket scorecard ratings and squad selection"};
    app.require_subcommand(1);
    app.failure_message([](const CLI::App* a, const CLI::Error& e) {
        return "error: " + CLI::FailureMessage::simple(a, e);
    });

    RunConfig run;
    app.add_option("--store", run.store_path, "store file path");
    app.add_option("--config", run.config_path, "rating configuration document");
    app.add_option("--format", run.format_name, "output format: table, csv, json-lines")
        ->default_val("table");
    app.add_option("--reference-date", run.reference_date, "reference date (YYYY-MM-DD)");
    app.add_option("--competitions", run.competitions, "comma-separated competition tags");
    app.add_option("--from", run.from_date, "window start date (inclusive)");
    app.add_option("--to", run.to_date, "window end date (inclusive)");

    std::vector<std::string> import_paths;
    CLI::App* import = app.add_subcommand("import", "import scorecard documents into the store");
    import->add_option("paths", import_paths, "scorecard documents")->required()->expected(-1);

    std::string stats_player;
    CLI::App* stats = app.add_subcommand("stats", "aggregates for one player over the window");
    stats->add_option("player", stats_player, "player id")->required();

    std::string rate_category;
    CLI::App* rate = app.add_subcommand("rate", "ranked rating table for a category");
    rate->add_option("category", rate_category, "role category")->required();

    SelectFlags select_flags;
    CLI::App* select = app.add_subcommand("select", "recommend a squad under the template quotas");
    select->add_option("--template", select_flags.template_name,
                       "template preset (default, even-split) or quota document");
    select->add_option("--rated", select_flags.rated_path,
                       "pre-rated pools document (skips the rating pipeline)");
    select->add_option("--compare", select_flags.compare_path,
                       "name-list file to compare the squad against");
    select->add_option("--strategy", select_flags.strategy, "exact or greedy")
        ->default_val("exact");
    select->add_option("--include", select_flags.includes, "force include, player_id:category");
    select->add_option("--exclude", select_flags.excludes, "exclude player_id");
    select->add_option("--wildcard", select_flags.wildcards,
                       "exempt player_id from eligibility thresholds");

    std::string compare_a, compare_b;
    CLI::App* compare = app.add_subcommand("compare", "compare two squad name lists");
    compare->add_option("a", compare_a, "first name-list file")->required();
    compare->add_option("b", compare_b, "second name-list file")->required();

    std::string figure;
    CLI::App* plotdata = app.add_subcommand("plotdata", "emit figure point series");
    plotdata->add_option("figure", figure, "spinners, openers, or allrounders")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (import->parsed()) return cmd_import(run, import_paths);
        if (stats->parsed()) return cmd_stats(run, stats_player);
        if (rate->parsed()) return cmd_rate(run, rate_category);
        if (select->parsed()) return cmd_select(run, select_flags);
        if (compare->parsed()) return cmd_compare(run, compare_a, compare_b);
        if (plotdata->parsed()) return cmd_plotdata(run, figure);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
