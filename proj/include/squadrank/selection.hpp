#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "squadrank/domain.hpp"
#include "squadrank/rating.hpp"

namespace squadrank {

struct SquadTemplate {
    std::map<RoleCategory, int> quota;

    int squad_size() const {
        int total = 0;
        for (const auto& [cat, q] : quota) total += q;
        return total;
    }

    int quota_for(RoleCategory cat) const {
        auto it = quota.find(cat);
        return it == quota.end() ? 0 : it->second;
    }

    /// 3 openers / 2 middle / 2 lower / 1 keeper / 2 spinners / 3 pacers /
    /// 2 all-rounders: five specialist bowlers plus two all-rounders.
    static SquadTemplate default_template() {
        SquadTemplate t;
        t.quota = {{RoleCategory::opener, 3},      {RoleCategory::middle_order, 2},
                   {RoleCategory::lower_order, 2}, {RoleCategory::wicketkeeper, 1},
                   {RoleCategory::spinner, 2},     {RoleCategory::pacer, 3},
                   {RoleCategory::all_rounder, 2}};
        return t;
    }

    /// Six specialist batsmen and six specialist bowlers.
    static SquadTemplate even_split_template() {
        SquadTemplate t;
        t.quota = {{RoleCategory::opener, 2},      {RoleCategory::middle_order, 2},
                   {RoleCategory::lower_order, 2}, {RoleCategory::wicketkeeper, 1},
                   {RoleCategory::spinner, 3},     {RoleCategory::pacer, 3},
                   {RoleCategory::all_rounder, 2}};
        return t;
    }

    bool operator==(const SquadTemplate&) const = default;
};

enum class Provenance { selected, forced_include, wildcard };

inline std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::selected: return "selected";
        case Provenance::forced_include: return "forced-include";
        case Provenance::wildcard: return "wildcard";
    }
    return "selected";
}

struct SquadSlot {
    std::string player_id;
    RoleCategory category{};
    double score = 0.0;
    Provenance provenance = Provenance::selected;

    bool operator==(const SquadSlot&) const = default;
};

struct Squad {
    std::vector<SquadSlot> slots;  // sorted by (category, score desc, player_id)
    double total_score = 0.0;

    std::vector<std::string> player_ids() const {
        std::vector<std::string> ids;
        ids.reserve(slots.size());
        for (const SquadSlot& s : slots) ids.push_back(s.player_id);
        return ids;
    }
};

struct Overrides {
    std::vector<std::pair<std::string, RoleCategory>> force_include;
    std::set<std::string> exclude;
    std::set<std::string> wildcards;  // consumed by the rating pipeline
};

struct RatedPlayer {
    std::string player_id;
    double score = 0.0;
};

using CategoryPools = std::map<RoleCategory, std::vector<RatedPlayer>>;

inline CategoryPools pools_from_ratings(const std::map<RoleCategory, std::vector<RatingPoint>>& rated) {
    CategoryPools pools;
    for (const auto& [cat, points] : rated) {
        auto& pool = pools[cat];
        for (const RatingPoint& p : points) pool.push_back({p.player_id, p.score});
    }
    return pools;
}

// ---------------------------------------------------------------------------
// Internals shared by the exact, greedy, and brute-force selectors
// ---------------------------------------------------------------------------

namespace detail {

constexpr double selection_eps = 1e-9;
constexpr double neg_inf = -std::numeric_limits<double>::infinity();

inline std::size_t category_index(RoleCategory cat) {
    return static_cast<std::size_t>(cat);
}

struct Candidate {
    std::string player_id;
    // (category index, score), at most one per category
    std::vector<std::pair<std::size_t, double>> options;
};

/// Instance after overrides: forced slots carved out, quotas reduced,
/// excluded and forced players removed from the candidate set.
struct ReducedInstance {
    std::vector<SquadSlot> forced;
    double forced_score = 0.0;
    std::vector<Candidate> candidates;  // sorted by player_id
    std::array<int, 7> quota{};
};

inline ReducedInstance reduce_instance(const CategoryPools& pools, const SquadTemplate& tmpl,
                                       const Overrides& overrides) {
    for (const auto& [id, cat] : overrides.force_include)
        if (overrides.exclude.count(id))
            throw Error("player '" + id + "' is both force-included and excluded");

    std::array<int, 7> quota{};
    for (const auto& [cat, q] : tmpl.quota) {
        if (q < 0) throw Error("negative quota for category " + std::string(to_string(cat)));
        quota[category_index(cat)] = q;
    }

    // Per-player score by category, exclusions applied.
    std::map<std::string, std::map<std::size_t, double>> options;
    for (const auto& [cat, pool] : pools) {
        std::set<std::string> seen;
        for (const RatedPlayer& p : pool) {
            if (!seen.insert(p.player_id).second)
                throw Error("player '" + p.player_id + "' appears twice in the " +
                            std::string(to_string(cat)) + " pool");
            if (overrides.exclude.count(p.player_id)) continue;
            options[p.player_id][category_index(cat)] = p.score;
        }
    }

    ReducedInstance inst;
    inst.quota = quota;
    std::set<std::string> forced_ids;
    std::array<int, 7> forced_per_cat{};
    for (const auto& [id, cat] : overrides.force_include) {
        if (!forced_ids.insert(id).second)
            throw Error("player '" + id + "' is force-included twice");
        const std::size_t c = category_index(cat);
        forced_per_cat[c] += 1;
        if (forced_per_cat[c] > quota[c])
            throw Error("force-includes exceed the " + std::string(to_string(cat)) + " quota of " +
                        std::to_string(quota[c]));
        double score = 0.0;
        auto it = options.find(id);
        if (it != options.end()) {
            auto opt = it->second.find(c);
            if (opt != it->second.end()) score = opt->second;
        }
        SquadSlot slot{id, cat, score, Provenance::forced_include};
        inst.forced.push_back(slot);
        inst.forced_score += score;
        inst.quota[c] -= 1;
    }

    for (const auto& [id, opts] : options) {
        if (forced_ids.count(id)) continue;
        Candidate cand;
        cand.player_id = id;
        for (const auto& [c, score] : opts)
            if (inst.quota[c] > 0) cand.options.emplace_back(c, score);
        if (!cand.options.empty()) inst.candidates.push_back(std::move(cand));
    }
    return inst;
}

/// Throws naming the first category whose pool cannot cover its quota.
inline void check_category_counts(const ReducedInstance& inst) {
    std::array<int, 7> available{};
    for (const Candidate& cand : inst.candidates)
        for (const auto& [c, score] : cand.options) available[c] += 1;
    for (RoleCategory cat : all_role_categories) {
        const std::size_t c = category_index(cat);
        if (available[c] < inst.quota[c])
            throw Error("category " + std::string(to_string(cat)) + " needs " +
                        std::to_string(inst.quota[c]) + " more player(s) but only " +
                        std::to_string(available[c]) + " candidate(s) are eligible");
    }
}

/// Assignment DP over the remaining-quota vector. States are the mixed-radix
/// encoding of per-category used counts; each candidate either sits out or
/// fills one eligible category. Returns the maximum achievable score for
/// filling every quota exactly, or -inf when infeasible. `skip_id` lets the
/// tie-break probe exclude one candidate without copying the instance.
class QuotaDp {
public:
    explicit QuotaDp(const std::array<int, 7>& quota) : quota_(quota) {
        std::size_t states = 1;
        for (std::size_t c = 0; c < 7; ++c) {
            stride_[c] = states;
            states *= static_cast<std::size_t>(quota[c]) + 1;
        }
        total_states_ = states;
        if (total_states_ > (1u << 22))
            throw Error("squad template too large for the exact selector");
        full_ = 0;
        for (std::size_t c = 0; c < 7; ++c) full_ += stride_[c] * quota[c];
    }

    double max_score(const std::vector<Candidate>& candidates,
                     const std::string& skip_id = {}) const {
        std::vector<double> dp(total_states_, neg_inf);
        dp[0] = 0.0;
        std::vector<double> next(total_states_);
        for (const Candidate& cand : candidates) {
            if (!skip_id.empty() && cand.player_id == skip_id) continue;
            next = dp;
            for (std::size_t s = 0; s < total_states_; ++s) {
                if (dp[s] == neg_inf) continue;
                for (const auto& [c, score] : cand.options) {
                    const std::size_t used = (s / stride_[c]) % (quota_[c] + 1);
                    if (static_cast<int>(used) >= quota_[c]) continue;
                    const std::size_t t = s + stride_[c];
                    const double v = dp[s] + score;
                    if (v > next[t]) next[t] = v;
                }
            }
            dp.swap(next);
        }
        return dp[full_];
    }

private:
    std::array<int, 7> quota_;
    std::array<std::size_t, 7> stride_{};
    std::size_t total_states_ = 1;
    std::size_t full_ = 0;
};

inline Squad assemble_squad(std::vector<SquadSlot> slots, const std::set<std::string>& wildcards) {
    Squad squad;
    for (SquadSlot& slot : slots) {
        if (slot.provenance == Provenance::selected && wildcards.count(slot.player_id))
            slot.provenance = Provenance::wildcard;
        squad.total_score += slot.score;
    }
    std::sort(slots.begin(), slots.end(), [](const SquadSlot& a, const SquadSlot& b) {
        if (a.category != b.category) return category_index(a.category) < category_index(b.category);
        if (a.score != b.score) return a.score > b.score;
        return a.player_id < b.player_id;
    });
    squad.slots = std::move(slots);
    return squad;
}

using Pair = std::pair<std::size_t, std::string>;  // (category index, player_id)

inline bool pair_list_less(const std::vector<Pair>& a, const std::vector<Pair>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exact selection
// ---------------------------------------------------------------------------

/// Maximizes total score subject to exact per-category quotas and one slot
/// per player. Among optimal assignments, returns the one whose sorted
/// (category, player_id) list is lexicographically smallest: candidate pairs
/// are probed in ascending order and fixed whenever an optimum containing
/// all fixed pairs still exists (each probe is a DP solve on the reduced
/// instance). Scores within 1e-9 of the optimum count as optimal.
inline Squad select_squad(const CategoryPools& pools, const SquadTemplate& tmpl,
                          const Overrides& overrides = {},
                          std::vector<std::string>* warnings = nullptr) {
    using namespace detail;
    ReducedInstance inst = reduce_instance(pools, tmpl, overrides);
    if (warnings) {
        for (const SquadSlot& slot : inst.forced) {
            bool rated = false;
            auto pool = pools.find(slot.category);
            if (pool != pools.end())
                for (const RatedPlayer& p : pool->second)
                    if (p.player_id == slot.player_id) rated = true;
            if (!rated)
                warnings->push_back("forced include " + slot.player_id + " has no " +
                                    std::string(to_string(slot.category)) +
                                    " rating; scored 0");
        }
    }
    check_category_counts(inst);

    QuotaDp dp(inst.quota);
    const double best = dp.max_score(inst.candidates);
    if (best == neg_inf)
        throw Error("quotas are infeasible: eligible players overlap across categories");

    // Probe pairs in ascending (category, player_id) order.
    std::vector<std::tuple<std::size_t, std::string, double>> pairs;
    for (const Candidate& cand : inst.candidates)
        for (const auto& [c, score] : cand.options) pairs.emplace_back(c, cand.player_id, score);
    std::sort(pairs.begin(), pairs.end());

    std::vector<SquadSlot> slots = inst.forced;
    std::vector<Candidate> remaining = inst.candidates;
    std::array<int, 7> remaining_quota = inst.quota;
    double fixed_score = 0.0;
    int open_slots = 0;
    for (int q : remaining_quota) open_slots += q;

    for (const auto& [c, id, score] : pairs) {
        if (open_slots == 0) break;
        if (remaining_quota[c] == 0) continue;
        auto it = std::find_if(remaining.begin(), remaining.end(),
                               [&](const Candidate& cand) { return cand.player_id == id; });
        if (it == remaining.end()) continue;  // already seated

        std::array<int, 7> probe_quota = remaining_quota;
        probe_quota[c] -= 1;
        const double rest = QuotaDp(probe_quota).max_score(remaining, id);
        if (rest == neg_inf) continue;
        if (fixed_score + score + rest < best - selection_eps) continue;

        slots.push_back({id, static_cast<RoleCategory>(c), score, Provenance::selected});
        fixed_score += score;
        remaining_quota = probe_quota;
        remaining.erase(it);
        open_slots -= 1;
    }
    if (open_slots != 0)
        throw Error("quotas are infeasible: eligible players overlap across categories");
    return detail::assemble_squad(std::move(slots), overrides.wildcards);
}

// ---------------------------------------------------------------------------
// Greedy strategy (comparison baseline)
// ---------------------------------------------------------------------------

/// One sweep over all (player, category, score) triples by score descending
/// (ties: category order, then player_id); seats a triple whenever the player
/// is free and the category still has room. Errors when the sweep cannot
/// fill every quota.
inline Squad greedy_select_squad(const CategoryPools& pools, const SquadTemplate& tmpl,
                                 const Overrides& overrides = {}) {
    using namespace detail;
    ReducedInstance inst = reduce_instance(pools, tmpl, overrides);
    check_category_counts(inst);

    struct Triple {
        double score;
        std::size_t cat;
        std::string id;
    };
    std::vector<Triple> triples;
    for (const Candidate& cand : inst.candidates)
        for (const auto& [c, score] : cand.options) triples.push_back({score, c, cand.player_id});
    std::sort(triples.begin(), triples.end(), [](const Triple& a, const Triple& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.cat != b.cat) return a.cat < b.cat;
        return a.id < b.id;
    });

    std::vector<SquadSlot> slots = inst.forced;
    std::array<int, 7> remaining = inst.quota;
    std::set<std::string> seated;
    for (const Triple& t : triples) {
        if (remaining[t.cat] == 0 || seated.count(t.id)) continue;
        slots.push_back({t.id, static_cast<RoleCategory>(t.cat), t.score, Provenance::selected});
        seated.insert(t.id);
        remaining[t.cat] -= 1;
    }
    for (RoleCategory cat : all_role_categories)
        if (remaining[category_index(cat)] > 0)
            throw Error("greedy selection left category " + std::string(to_string(cat)) +
                        " short by " + std::to_string(remaining[category_index(cat)]));
    return assemble_squad(std::move(slots), overrides.wildcards);
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

/// Exhaustive enumeration of every quota-exact assignment; same optimum and
/// tie-break as select_squad. Guarded to at most 20 candidates.
inline Squad brute_force_select(const CategoryPools& pools, const SquadTemplate& tmpl,
                                const Overrides& overrides = {}) {
    using namespace detail;
    ReducedInstance inst = reduce_instance(pools, tmpl, overrides);
    if (inst.candidates.size() > 20)
        throw Error("brute_force_select: more than 20 candidates");
    check_category_counts(inst);

    const std::size_t n = inst.candidates.size();
    // suffix_eligible[i][c]: candidates at index >= i eligible for c
    std::vector<std::array<int, 7>> suffix_eligible(n + 1);
    suffix_eligible[n] = {};
    for (std::size_t i = n; i-- > 0;) {
        suffix_eligible[i] = suffix_eligible[i + 1];
        for (const auto& [c, score] : inst.candidates[i].options) suffix_eligible[i][c] += 1;
    }

    int open = 0;
    for (int q : inst.quota) open += q;

    std::vector<Pair> chosen;
    std::vector<double> chosen_scores;
    bool found = false;
    double best_score = neg_inf;
    std::vector<Pair> best_pairs;
    std::array<int, 7> remaining = inst.quota;

    auto leaf = [&](double score) {
        std::vector<Pair> sorted_pairs = chosen;
        std::sort(sorted_pairs.begin(), sorted_pairs.end());
        if (!found || score > best_score + selection_eps ||
            (std::abs(score - best_score) <= selection_eps &&
             pair_list_less(sorted_pairs, best_pairs))) {
            found = true;
            best_score = score;
            best_pairs = std::move(sorted_pairs);
        }
    };

    // Depth-first over candidates: sit out, or take one eligible open slot.
    auto recurse = [&](auto&& self, std::size_t i, int open_slots, double score) -> void {
        if (open_slots == 0) {
            // remaining candidates all sit out
            leaf(score);
            return;
        }
        if (i == n) return;
        for (std::size_t c = 0; c < 7; ++c)
            if (remaining[c] > suffix_eligible[i][c]) return;

        self(self, i + 1, open_slots, score);  // sit out
        for (const auto& [c, s] : inst.candidates[i].options) {
            if (remaining[c] == 0) continue;
            remaining[c] -= 1;
            chosen.emplace_back(c, inst.candidates[i].player_id);
            self(self, i + 1, open_slots - 1, score + s);
            chosen.pop_back();
            remaining[c] += 1;
        }
    };
    recurse(recurse, 0, open, 0.0);

    if (!found) throw Error("quotas are infeasible: eligible players overlap across categories");

    std::map<std::string, std::map<std::size_t, double>> score_of;
    for (const Candidate& cand : inst.candidates)
        for (const auto& [c, s] : cand.options) score_of[cand.player_id][c] = s;
    std::vector<SquadSlot> slots = inst.forced;
    for (const Pair& p : best_pairs)
        slots.push_back({p.second, static_cast<RoleCategory>(p.first),
                         score_of[p.second][p.first], Provenance::selected});
    return assemble_squad(std::move(slots), overrides.wildcards);
}

// ---------------------------------------------------------------------------
// Squad comparison
// ---------------------------------------------------------------------------

struct CompareReport {
    std::vector<std::string> common;
    std::vector<std::string> only_a;
    std::vector<std::string> only_b;
    int mismatch_count = 0;
    double jaccard = 0.0;
};

/// Case-folded, whitespace-collapsed; hyphens and underscores also fold to
/// spaces so player ids and display names compare equal.
inline std::string normalize_name(std::string_view name) {
    std::string out;
    bool pending_space = false;
    for (char raw : name) {
        char c = raw;
        if (c == '-' || c == '_') c = ' ';
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

inline CompareReport compare_squads(const std::vector<std::string>& squad_a,
                                    const std::vector<std::string>& squad_b) {
    if (squad_a.empty() || squad_b.empty()) throw Error("cannot compare an empty squad list");
    auto normalize_list = [](const std::vector<std::string>& squad, const char* label) {
        std::map<std::string, std::string> normalized;  // normalized -> first original
        for (const std::string& name : squad) {
            std::string key = normalize_name(name);
            if (key.empty()) throw Error(std::string("blank name in squad ") + label);
            if (!normalized.emplace(key, name).second)
                throw Error("duplicate name '" + name + "' in squad " + label);
        }
        return normalized;
    };
    const auto a = normalize_list(squad_a, "A");
    const auto b = normalize_list(squad_b, "B");

    CompareReport report;
    for (const auto& [key, original] : a) {
        if (b.count(key))
            report.common.push_back(original);
        else
            report.only_a.push_back(original);
    }
    for (const auto& [key, original] : b)
        if (!a.count(key)) report.only_b.push_back(original);

    report.mismatch_count = static_cast<int>(report.only_a.size());
    const std::size_t unions = report.common.size() + report.only_a.size() + report.only_b.size();
    report.jaccard = unions == 0 ? 0.0 : static_cast<double>(report.common.size()) / unions;
    return report;
}

}  // namespace squadrank
