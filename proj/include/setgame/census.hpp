#pragma once

// Exact counts of the winning hierarchy over the finite levels: how many
// sets of rank <= m carry each game value nu. Two independent routes are
// kept deliberately separate — a brute-force tally of per-code
// classifications (m <= 5) and closed-form recurrences driven by level
// sizes (m <= 6, where the level itself has 2^65536 members) — so each can
// audit the other.

#include <string>
#include <vector>

#include <json.hpp>

#include "setgame/nat.hpp"
#include "setgame/codes.hpp"

namespace setgame {

enum class CensusMethod : int { brute, formula };

std::string to_string(CensusMethod m);

struct CensusTable {
    unsigned m = 0;
    CensusMethod method = CensusMethod::brute;
    std::vector<Nat> counts;  // counts[nu] = |{x : rank(x) <= m, w(x) = nu}|, nu < m

    Nat total() const;
};

// Tally of classify_level(m); m <= kEnumRankCap.
CensusTable census_brute(unsigned m);

// Level-size recurrences, no enumeration; 1 <= m <= kCountRankCap.
//   |S_{m+1, 2k+1}| = 2^(|V_m| - E_{<k}) - 2^(|V_m| - E_{<=k}),  E = even-count prefix sums
//   |S_{m+1, 2k+2}| = 2^(O_{<=k}) - 2^(O_{<k}),                  O = odd-count prefix sums
//   |S_{m, 0}| = 1
CensusTable census_formula(unsigned m);

struct RatioTable {
    unsigned m = 0;
    Nat level_size;
    std::vector<Rat> ratios;          // ratios[nu] = counts[nu] / |V_m|, canonical
    std::vector<Rat> limit_distance;  // |ratios[nu] - limit|, limit = 1/2 for nu in {1,3}, else 0
};

// Exact value densities at level m with distance to the rank-omega limits;
// 1 <= m <= kCountRankCap.
RatioTable prob_table(unsigned m);

// CSV with header "m,nu,count,ratio_num,ratio_den"; ratios reduced.
std::string to_csv(const CensusTable& t);

nlohmann::json to_json(const CensusTable& t);
nlohmann::json to_json(const RatioTable& t);

}  // namespace setgame
