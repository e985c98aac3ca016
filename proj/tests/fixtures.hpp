// Reference fixtures: the published rating pools and squads used by the
// golden tests, plus synthetic raw-stat stores whose aggregate values force
// a unique min-max ordering per category.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "squadrank/selection.hpp"
#include "squadrank/store.hpp"

namespace fixtures {

namespace sq = squadrank;
using testutil::MatchBuilder;
using testutil::player;

// ---------------------------------------------------------------------------
// Published per-category rating pools (pre-rated injection path)
// ---------------------------------------------------------------------------

inline sq::CategoryPools reference_rated_pools() {
    sq::CategoryPools pools;
    pools[sq::RoleCategory::opener] = {{"shamsur-rahman", 98.66},
                                       {"imrul-kayes", 92.95},
                                       {"tamim-iqbal", 92.28},
                                       {"anamul-haque", 91.1}};
    pools[sq::RoleCategory::middle_order] = {{"mushfiqur-rahim", 74.0}, {"salman-hossain", 73.0},
                                             {"mosaddek-hossain", 71.0}, {"mahmudullah", 68.7},
                                             {"tushar-imran", 68.0},     {"nasir-hossain", 61.0}};
    pools[sq::RoleCategory::lower_order] = {
        {"shuvagata-home", 90.833}, {"sabbir-rahman", 82.88}, {"nasir-hossain", 74.05}};
    pools[sq::RoleCategory::wicketkeeper] = {{"mushfiqur-rahim", 74.0}};
    pools[sq::RoleCategory::spinner] = {{"shakib-al-hasan", 82.2066},
                                        {"alok-kapali", 79.6795},
                                        {"mehedi-hasan", 75.1425},
                                        {"jubair-hossain", 72.1134}};
    pools[sq::RoleCategory::pacer] = {{"mashrafe-mortaza", 81.92},
                                      {"taskin-ahmed", 79.78},
                                      {"al-amin-hossain", 78.5},
                                      {"ziaur-rahman", 78.0},
                                      {"s-rana", 76.8}};
    pools[sq::RoleCategory::all_rounder] = {{"shakib-al-hasan", 88.0},
                                            {"mahmudullah", 82.88},
                                            {"mosaddek-hossain", 76.0},
                                            {"al-amin-hossain", 50.58}};
    return pools;
}

inline std::vector<std::string> recommended_squad_ids() {
    return {"shamsur-rahman", "imrul-kayes",   "tamim-iqbal",    "mushfiqur-rahim",
            "salman-hossain", "mosaddek-hossain", "sabbir-rahman", "shuvagata-home",
            "shakib-al-hasan", "mahmudullah",   "alok-kapali",    "mehedi-hasan",
            "mashrafe-mortaza", "taskin-ahmed", "al-amin-hossain"};
}

inline std::vector<std::string> recommended_squad_names() {
    return {"Shamsur Rahman", "Imrul Kayes",   "Tamim Iqbal",    "Mushfiqur Rahim",
            "Salman Hossain", "Mosaddek Hossain", "Sabbir Rahman", "Shuvagata Home",
            "Shakib Al Hasan", "Mahmudullah",  "Alok Kapali",    "Mehedi Hasan",
            "Mashrafe Mortaza", "Taskin Ahmed", "Al-Amin Hossain"};
}

inline std::vector<std::string> current_squad_names() {
    return {"Soumya Sarkar",  "Tamim Iqbal",  "Imrul Kayes",   "Liton Kumar Das",
            "Mushfiqur Rahim", "Nasir Hossain", "Sabbir Rahman", "Mustafizur Rahman",
            "Mahmudullah",    "Shakib Al Hasan", "Arafat Sunny", "Jubair Hossain",
            "Mashrafe Mortaza", "Taskin Ahmed", "Al-Amin Hossain"};
}

/// Recommended squad after the forced Soumya-for-Shamsur swap.
inline std::vector<std::string> override_squad_ids() {
    auto ids = recommended_squad_ids();
    for (auto& id : ids)
        if (id == "shamsur-rahman") id = "soumya-sarkar";
    return ids;
}

// ---------------------------------------------------------------------------
// Synthetic raw-stat stores. Both rating terms strictly dominate in the
// intended order, so any positive weights produce the same unique ranking.
// ---------------------------------------------------------------------------

inline sq::MatchStore ordering_fixture_spinners() {
    sq::MatchStore store;
    store.add_player(player("shakib-al-hasan", "Shakib Al Hasan", sq::BowlingStyle::slow_left_arm));
    store.add_player(player("alok-kapali", "Alok Kapali", sq::BowlingStyle::leg_break));
    store.add_player(player("mehedi-hasan", "Mehedi Hasan", sq::BowlingStyle::off_break));
    store.add_player(player("jubair-hossain", "Jubair Hossain", sq::BowlingStyle::leg_break));
    // economies 3.0 / 3.5 / 4.0 / 4.5, strike rates 20 / 24 / 30 / 40
    const int conceded[4][3] = {{20, 20, 20}, {24, 23, 23}, {27, 27, 26}, {30, 30, 30}};
    const int wickets[4][3] = {{2, 2, 2}, {2, 2, 1}, {2, 1, 1}, {1, 1, 1}};
    const char* ids[4] = {"shakib-al-hasan", "alok-kapali", "mehedi-hasan", "jubair-hossain"};
    const char* dates[3] = {"2016-04-05", "2016-04-12", "2016-04-19"};
    for (int m = 0; m < 3; ++m) {
        MatchBuilder match("spin-m" + std::to_string(m), dates[m]);
        for (int p = 0; p < 4; ++p) match.bowl(0, ids[p], 40, conceded[p][m], wickets[p][m]);
        store.add_match(match.build());
    }
    return store;
}

inline sq::MatchStore ordering_fixture_pacers() {
    sq::MatchStore store;
    const char* ids[5] = {"mashrafe-mortaza", "taskin-ahmed", "al-amin-hossain", "ziaur-rahman",
                          "s-rana"};
    const char* names[5] = {"Mashrafe Mortaza", "Taskin Ahmed", "Al-Amin Hossain", "Ziaur Rahman",
                            "S Rana"};
    for (int p = 0; p < 5; ++p) store.add_player(player(ids[p], names[p], sq::BowlingStyle::pace));
    // economies 4.0 / 4.2 / 4.4 / 4.6 / 4.8, strike rates 20 / 24 / 30 / 40 / 60
    const int conceded[5][3] = {
        {27, 27, 26}, {28, 28, 28}, {30, 29, 29}, {31, 31, 30}, {32, 32, 32}};
    const int wickets[5][3] = {{2, 2, 2}, {2, 2, 1}, {2, 1, 1}, {1, 1, 1}, {1, 1, 0}};
    const char* dates[3] = {"2016-05-03", "2016-05-10", "2016-05-17"};
    for (int m = 0; m < 3; ++m) {
        MatchBuilder match("pace-m" + std::to_string(m), dates[m]);
        for (int p = 0; p < 5; ++p) match.bowl(0, ids[p], 40, conceded[p][m], wickets[p][m]);
        store.add_match(match.build());
    }
    return store;
}

inline sq::MatchStore ordering_fixture_openers() {
    sq::MatchStore store;
    store.add_player(player("shamsur-rahman", "Shamsur Rahman"));
    store.add_player(player("imrul-kayes", "Imrul Kayes"));
    store.add_player(player("tamim-iqbal", "Tamim Iqbal"));
    store.add_player(player("anamul-haque", "Anamul Haque"));
    // averages 100 / 90 / 80 / 70, strike rates 125 / 112.5 / 100 / 87.5
    const int runs[4] = {100, 90, 80, 70};
    const char* dates[3] = {"2016-06-01", "2016-06-08", "2016-06-15"};
    for (int m = 0; m < 3; ++m) {
        MatchBuilder match("open-m" + std::to_string(m), dates[m]);
        match.bat(0, "shamsur-rahman", 1, runs[0], 80, 10, 2, true);
        match.bat(0, "imrul-kayes", 2, runs[1], 80, 9, 2, true);
        match.bat(1, "tamim-iqbal", 1, runs[2], 80, 8, 1, true);
        match.bat(1, "anamul-haque", 2, runs[3], 80, 7, 1, true);
        store.add_match(match.build());
    }
    return store;
}

inline sq::MatchStore ordering_fixture_middle() {
    sq::MatchStore store;
    const char* ids[6] = {"mushfiqur-rahim", "salman-hossain", "mosaddek-hossain",
                          "mahmudullah",     "tushar-imran",   "nasir-hossain"};
    const char* names[6] = {"Mushfiqur Rahim", "Salman Hossain", "Mosaddek Hossain",
                            "Mahmudullah",     "Tushar Imran",   "Nasir Hossain"};
    for (int p = 0; p < 6; ++p)
        store.add_player(player(ids[p], names[p], sq::BowlingStyle::none, p == 0));
    // averages 95 / 90 / 85 / 80 / 75 / 70 over 250 balls each:
    // strike rates 114 / 108 / 102 / 96 / 90 / 84
    const int runs[6][3] = {{95, 95, 95}, {90, 90, 90}, {85, 85, 85},
                            {80, 80, 80}, {75, 75, 75}, {70, 70, 70}};
    const int balls[3] = {84, 83, 83};
    const char* dates[3] = {"2016-07-01", "2016-07-08", "2016-07-15"};
    for (int m = 0; m < 3; ++m) {
        MatchBuilder match("mid-m" + std::to_string(m), dates[m]);
        for (int p = 0; p < 3; ++p) match.bat(0, ids[p], 3 + p, runs[p][m], balls[m], 5, 0, true);
        for (int p = 3; p < 6; ++p) match.bat(1, ids[p], p, runs[p][m], balls[m], 5, 0, true);
        store.add_match(match.build());
    }
    return store;
}

inline sq::MatchStore ordering_fixture_lower() {
    sq::MatchStore store;
    store.add_player(player("shuvagata-home", "Shuvagata Home"));
    store.add_player(player("sabbir-rahman", "Sabbir Rahman"));
    store.add_player(player("nasir-hossain", "Nasir Hossain"));
    // strike rates 150 / 130 / 110, boundary rates 4 / 3 / 2 per innings
    const char* ids[3] = {"shuvagata-home", "sabbir-rahman", "nasir-hossain"};
    const int runs[3][3] = {{50, 50, 50}, {44, 43, 43}, {37, 37, 36}};
    const int balls[3][3] = {{34, 33, 33}, {34, 33, 33}, {34, 33, 33}};
    const int fours[3] = {4, 3, 2};
    const char* dates[3] = {"2016-08-01", "2016-08-08", "2016-08-15"};
    for (int m = 0; m < 3; ++m) {
        MatchBuilder match("low-m" + std::to_string(m), dates[m]);
        match.bat(0, ids[0], 6, runs[0][m], balls[0][m], fours[0], 0, true);
        match.bat(0, ids[1], 7, runs[1][m], balls[1][m], fours[1], 0, true);
        match.bat(1, ids[2], 6, runs[2][m], balls[2][m], fours[2], 0, true);
        store.add_match(match.build());
    }
    return store;
}

inline sq::MatchStore ordering_fixture_all_rounders() {
    sq::MatchStore store;
    const char* ids[4] = {"shakib-al-hasan", "mahmudullah", "mosaddek-hossain", "al-amin-hossain"};
    const char* names[4] = {"Shakib Al Hasan", "Mahmudullah", "Mosaddek Hossain",
                            "Al-Amin Hossain"};
    const sq::BowlingStyle styles[4] = {sq::BowlingStyle::slow_left_arm, sq::BowlingStyle::off_break,
                                        sq::BowlingStyle::off_break, sq::BowlingStyle::pace};
    for (int p = 0; p < 4; ++p) store.add_player(player(ids[p], names[p], styles[p]));
    // batting averages 60 / 55 / 50 / 20, bowling averages 20 / 25 / 30 / 25:
    // deltas 40 / 30 / 20 / -5
    const int runs[4] = {60, 55, 50, 20};
    const int conceded[4][3] = {{20, 20, 20}, {17, 17, 16}, {20, 20, 20}, {17, 17, 16}};
    const int wickets[4][3] = {{1, 1, 1}, {1, 1, 0}, {1, 1, 0}, {1, 1, 0}};
    const char* dates[3] = {"2016-09-01", "2016-09-08", "2016-09-15"};
    for (int m = 0; m < 3; ++m) {
        MatchBuilder match("ar-m" + std::to_string(m), dates[m]);
        for (int p = 0; p < 4; ++p) {
            match.bat(0, ids[p], 3 + p, runs[p], 60, 2, 0, true);
            match.bowl(1, ids[p], 20, conceded[p][m], wickets[p][m]);
        }
        store.add_match(match.build());
    }
    return store;
}

}  // namespace fixtures
