#include "setgame/census.hpp"

#include <sstream>

#include "setgame/classify.hpp"

namespace setgame {

std::string to_string(CensusMethod m) {
    return m == CensusMethod::brute ? "brute" : "formula";
}

Nat CensusTable::total() const {
    Nat t = 0;
    for (const auto& c : counts) t += c;
    return t;
}

CensusTable census_brute(unsigned m) {
    CensusTable t{m, CensusMethod::brute, {}};
    if (m == 0) return t;  // V_0 is empty
    auto level = classify_level(m);
    t.counts.assign(m, 0);
    for (const auto& c : level) {
        if (c.w >= t.counts.size()) t.counts.resize(c.w + 1, 0);
        t.counts[c.w] += 1;
    }
    return t;
}

CensusTable census_formula(unsigned m) {
    if (m > kCountRankCap)
        throw DomainError("census_formula: m must be at most " + std::to_string(kCountRankCap));
    if (m == 0) return CensusTable{0, CensusMethod::formula, {}};  // V_0 is empty
    std::vector<Nat> counts{1};  // level 1: only {} with value 0
    for (unsigned level = 2; level <= m; ++level) {
        const std::vector<Nat>& prev = counts;
        unsigned long v_prev = level_size(level - 1).get_ui();  // <= |V_5| = 65536
        auto at = [&prev](unsigned nu) -> Nat {
            return nu < prev.size() ? prev[nu] : Nat(0);
        };
        std::vector<Nat> next(level);
        next[0] = 1;
        Nat even_before = 0;  // sum of prev even counts below the current k
        Nat odd_before = 0;   // sum of prev odd counts below the current k
        for (unsigned k = 0; 2 * k + 1 < level; ++k) {
            Nat even_through = even_before + at(2 * k);
            Nat odd_through = odd_before + at(2 * k + 1);
            // Sets whose least even-valued element value is exactly 2k.
            next[2 * k + 1] = pow2(v_prev - even_before.get_ui()) -
                              pow2(v_prev - even_through.get_ui());
            // Nonempty sets of odd-valued elements with maximum exactly 2k+1.
            if (2 * k + 2 < level)
                next[2 * k + 2] = pow2(odd_through.get_ui()) - pow2(odd_before.get_ui());
            even_before = std::move(even_through);
            odd_before = std::move(odd_through);
        }
        counts = std::move(next);
    }
    return CensusTable{m, CensusMethod::formula, std::move(counts)};
}

RatioTable prob_table(unsigned m) {
    if (m < 1 || m > kCountRankCap)
        throw DomainError("prob_table: m must be in [1, " + std::to_string(kCountRankCap) + "]");
    CensusTable t = census_formula(m);
    RatioTable r;
    r.m = m;
    r.level_size = level_size(m);
    r.ratios.reserve(t.counts.size());
    r.limit_distance.reserve(t.counts.size());
    for (std::size_t nu = 0; nu < t.counts.size(); ++nu) {
        Rat ratio(t.counts[nu], r.level_size);
        ratio.canonicalize();
        Rat limit = (nu == 1 || nu == 3) ? Rat(1, 2) : Rat(0);
        Rat dist = ratio - limit;
        if (sgn(dist) < 0) dist = -dist;
        dist.canonicalize();
        r.ratios.push_back(std::move(ratio));
        r.limit_distance.push_back(std::move(dist));
    }
    return r;
}

std::string to_csv(const CensusTable& t) {
    Nat size = level_size(t.m);
    std::ostringstream out;
    out << "m,nu,count,ratio_num,ratio_den\n";
    for (std::size_t nu = 0; nu < t.counts.size(); ++nu) {
        Rat ratio = t.m == 0 ? Rat(0) : Rat(t.counts[nu], size);
        ratio.canonicalize();
        out << t.m << ',' << nu << ',' << t.counts[nu].get_str() << ','
            << ratio.get_num().get_str() << ',' << ratio.get_den().get_str() << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const CensusTable& t) {
    nlohmann::json counts = nlohmann::json::object();
    for (std::size_t nu = 0; nu < t.counts.size(); ++nu)
        counts[std::to_string(nu)] = t.counts[nu].get_str();
    return {{"m", t.m},
            {"method", to_string(t.method)},
            {"counts", counts},
            {"total", t.total().get_str()}};
}

nlohmann::json to_json(const RatioTable& t) {
    nlohmann::json ratios = nlohmann::json::object();
    nlohmann::json dist = nlohmann::json::object();
    for (std::size_t nu = 0; nu < t.ratios.size(); ++nu) {
        ratios[std::to_string(nu)] = {{"num", t.ratios[nu].get_num().get_str()},
                                      {"den", t.ratios[nu].get_den().get_str()}};
        dist[std::to_string(nu)] = {{"num", t.limit_distance[nu].get_num().get_str()},
                                    {"den", t.limit_distance[nu].get_den().get_str()}};
    }
    return {{"m", t.m},
            {"level_size", t.level_size.get_str()},
            {"ratios", ratios},
            {"limit_distance", dist}};
}

}  // namespace setgame
