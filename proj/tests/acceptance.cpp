// Acceptance gate: eleven criteria, one pass/fail line each, exit 0 only if
// all pass. Each criterion is self-contained and states its own tolerance;
// the time-bounded ones measure wall-clock runtime.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "setgame/apg.hpp"
#include "setgame/census.hpp"
#include "setgame/classify.hpp"
#include "setgame/hf.hpp"
#include "setgame/model.hpp"

using namespace setgame;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& why) {
    if (!ok) throw Failure(why);
}

template <typename T>
std::string str(const T& v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

// Deterministic random graph on 1..max_nodes nodes; each possible edge is
// drawn independently.
Apg random_graph(std::mt19937_64& rng, unsigned max_nodes, bool acyclic) {
    unsigned n = 1 + rng() % max_nodes;
    Apg g;
    for (unsigned i = 0; i < n; ++i) g.add_node("n" + std::to_string(i));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (acyclic && j >= i) continue;  // edges point to earlier nodes only
            if (rng() % 4 == 0) g.add_edge(i, j);
        }
    g.point = 0;
    return g;
}

// --------------------------------------------------------------------------

void census_oracle_equivalence() {
    for (unsigned m = 1; m <= 5; ++m) {
        CensusTable b = census_brute(m);
        CensusTable f = census_formula(m);
        expect(b.counts == f.counts, "brute and formula disagree at m=" + str(m));
        expect(b.total() == level_size(m), "partition broken at m=" + str(m));
    }
    std::vector<Nat> m5{1, 32768, 255, 28672, 3840};
    expect(census_formula(5).counts == m5, "m=5 census is not {1,32768,255,28672,3840}");
}

void theorem2_finite_stage() {
    Rat half(1, 2);
    for (unsigned m = 2; m <= 6; ++m)
        expect(prob_table(m).ratios[1] == half, "ratio(nu=1) != 1/2 at m=" + str(m));
    expect(prob_table(5).ratios[3] == Rat(7, 16), "ratio(nu=3) != 7/16 at m=5");

    RatioTable t6 = prob_table(6);
    Rat gap = half - t6.ratios[3];
    Rat bound200(Nat(1), pow2(200));
    bound200.canonicalize();
    expect(sgn(gap) > 0 && gap < bound200, "ratio(nu=3) not within 2^-200 of 1/2 at m=6");
    Rat rest = t6.ratios[0] + t6.ratios[2] + t6.ratios[4] + t6.ratios[5];
    Rat bound255(Nat(1), pow2(255));
    bound255.canonicalize();
    expect(rest < bound255, "sum of other ratios at m=6 not below 2^-255");
}

void lemma5_rank_bound() {
    auto level = classify_level(5);
    for (unsigned long c = 0; c < 65536; ++c)
        expect(level[c].w <= rank(SetCode(c)), "w > rank at code " + str(c));
}

void lemma5_realized_values() {
    for (unsigned m = 1; m <= 5; ++m) {
        std::set<unsigned> seen;
        for (const auto& cls : classify_level(m)) seen.insert(cls.w);
        std::set<unsigned> expected;
        for (unsigned nu = 0; nu < m; ++nu) expected.insert(nu);
        expect(seen == expected, "realized w-set over V_" + str(m) + " is not {0.." +
                                     str(m - 1) + "}");
    }
    for (unsigned m = 1; m <= 6; ++m) {
        CensusTable t = census_formula(m);
        expect(t.counts.size() == m, "formula table at m=" + str(m) + " has wrong length");
        for (unsigned nu = 0; nu < m; ++nu)
            expect(t.counts[nu] > 0, "formula count zero at nu=" + str(nu) + ", m=" + str(m));
    }
}

void lemma1_witness_chain() {
    HfStore store;
    for (unsigned n = 0; n <= 16; ++n) {
        Hf z = witness(store, n);
        expect(classify(z).w == n, "witness(" + str(n) + ") has wrong value");
    }
}

void lemma2_powerset() {
    // A fresh node whose children are all non-DRAW is itself non-DRAW; when
    // all children are WIN_I the fresh node is WIN_II with w = 1 + max.
    auto check_graph = [](const Apg& g, const std::vector<std::uint32_t>& children) {
        Apg h = g;
        auto fresh = h.add_node("freshnode");
        bool all_win_i = true;
        unsigned max_w = 0;
        for (auto c : children) {
            h.add_edge(fresh, c);
        }
        auto outcomes = solve(h);
        for (auto c : children) {
            expect(outcomes[c].kind != OutcomeKind::DRAW, "child drifted to DRAW");
            all_win_i = all_win_i && outcomes[c].kind == OutcomeKind::WIN_I;
            max_w = std::max(max_w, outcomes[c].w);
        }
        expect(outcomes[fresh].kind != OutcomeKind::DRAW,
               "fresh node over non-DRAW children is DRAW");
        if (all_win_i && !children.empty())
            expect(outcomes[fresh] == Outcome{OutcomeKind::WIN_II, max_w + 1},
                   "fresh node over WIN_I children is not their WIN_II successor");
    };

    // 10 000 seeded random trials.
    std::mt19937_64 rng(424242);
    unsigned long trials = 0;
    while (trials < 10000) {
        Apg g = random_graph(rng, 6, false);
        auto outcomes = solve(g);
        std::vector<std::uint32_t> winning;
        for (std::uint32_t v = 0; v < g.size(); ++v)
            if (outcomes[v].kind != OutcomeKind::DRAW) winning.push_back(v);
        std::vector<std::uint32_t> chosen;
        for (auto v : winning)
            if (rng() % 2) chosen.push_back(v);
        check_graph(g, chosen);
        ++trials;
    }

    // Exhaustive <= 4-node graphs, every subset of the non-DRAW nodes.
    for (unsigned n = 1; n <= 4; ++n) {
        for_each_graph(n, [&](const Apg& g) {
            auto outcomes = solve(g);
            std::vector<std::uint32_t> winning;
            for (std::uint32_t v = 0; v < g.size(); ++v)
                if (outcomes[v].kind != OutcomeKind::DRAW) winning.push_back(v);
            for (std::uint64_t mask = 0; mask < (1ull << winning.size()); ++mask) {
                std::vector<std::uint32_t> chosen;
                for (std::size_t i = 0; i < winning.size(); ++i)
                    if (mask >> i & 1) chosen.push_back(winning[i]);
                check_graph(g, chosen);
            }
            return true;
        });
    }
}

void lemma10_sigma_needs_two() {
    for (unsigned n = 1; n <= 4; ++n) {
        for_each_graph(n, [&](const Apg& g) {
            auto outcomes = solve(g);
            std::vector<char> member(g.size(), 0);
            for (std::uint32_t v = 0; v < g.size(); ++v) {
                member[v] = 1;
                auto witness_node = sigma(g, member);
                member[v] = 0;
                if (witness_node && outcomes[v].kind != OutcomeKind::DRAW)
                    expect(outcomes[v].w > 1,
                           "sigma node with w <= 1 in a " + str(n) + "-node graph");
            }
            return true;
        });
    }
}

void sigma_spectrum_realizable() {
    for (unsigned nu = 2; nu <= 8; ++nu) {
        Apg g = sigma_witness(nu);
        expect(g.point.has_value(), "witness graph lacks a point at nu=" + str(nu));
        auto outcomes = solve(g);
        expect(outcomes[*g.point].kind != OutcomeKind::DRAW &&
                   outcomes[*g.point].w == nu,
               "witness point value is not " + str(nu));
        std::vector<char> member(g.size(), 0);
        member[*g.point] = 1;
        auto w = sigma(g, member);
        expect(w.has_value() && *w == *g.point, "witness point lacks the sigma property");
    }
}

void conservativity() {
    HfStore store;
    // All of V_4 through its membership graph, quotient included.
    for (unsigned long c = 0; c < 16; ++c) {
        Hf x = from_code(store, SetCode(c));
        Apg g;
        auto closure = tc(x);
        closure.push_back(x);
        std::vector<std::uint32_t> node_of(store.size(), 0);
        for (const Hf& t : closure) node_of[t.id()] = g.add_node("s" + std::to_string(t.id()));
        for (const Hf& t : closure)
            for (const Hf& e : t.elements()) g.add_edge(node_of[t.id()], node_of[e.id()]);
        Classification cls = classify(x);
        auto outcomes = solve(g);
        auto q = bisim_quotient(g);
        auto q_outcomes = solve(q.graph);
        const Outcome& direct = outcomes[node_of[x.id()]];
        const Outcome& through = q_outcomes[q.node_class[node_of[x.id()]]];
        Outcome want{cls.winner == Winner::I ? OutcomeKind::WIN_I : OutcomeKind::WIN_II, cls.w};
        expect(direct == want, "solve disagrees with classify at code " + str(c));
        expect(through == want, "quotient solve disagrees with classify at code " + str(c));
    }

    // 1 000 seeded random well-founded graphs; each node denotes an HF set.
    std::mt19937_64 rng(515151);
    for (unsigned t = 0; t < 1000; ++t) {
        Apg g = random_graph(rng, 8, true);
        auto outcomes = solve(g);
        auto q = bisim_quotient(g);
        auto q_outcomes = solve(q.graph);
        std::vector<Hf> denote(g.size(), store.empty());
        // Acyclic graphs only have edges to lower indices, so ascending order
        // visits children first.
        for (std::uint32_t v = 0; v < g.size(); ++v) {
            std::vector<Hf> elems;
            for (auto c : g.children[v]) elems.push_back(denote[c]);
            denote[v] = store.make(elems);
        }
        for (std::uint32_t v = 0; v < g.size(); ++v) {
            Classification cls = classify(denote[v]);
            Outcome want{cls.winner == Winner::I ? OutcomeKind::WIN_I : OutcomeKind::WIN_II,
                         cls.w};
            expect(outcomes[v] == want, "random wf graph: solve vs classify at trial " + str(t));
            expect(q_outcomes[q.node_class[v]] == want,
                   "random wf graph: quotient vs classify at trial " + str(t));
        }
    }
}

void model_construction() {
    Apg seed = seed_preset("quine");  // a: self-loop, e: empty
    Model m1 = build(seed, 1);
    expect(m1.graph.size() == 4, "quine stage 1 has " + str(m1.graph.size()) + " nodes, not 4");
    expect(check_end_extension(m1), "end-extension fails at stage 1");
    expect(check_extensionality(m1), "extensionality fails at stage 1");
    expect(check_thickness(m1, 0), "thickness(0) fails");

    Model m2 = build(seed, 2);
    bool found = false;
    for (const auto& e : check_reflection(m2).entries)
        if (e.statement == "sigma(W_II)") {
            found = true;
            expect(!e.at_first && !e.at_last, "sigma(W_II) is not false at both stages");
        }
    expect(found, "reflection report lacks sigma(W_II)");
}

void pattern_analogues() {
    std::string wf = classify_model(build(seed_preset("wf"), 2)).pattern();
    expect(wf == "ALL=W=HW=WF", "wf pattern is " + wf);
    std::string quine = classify_model(build(seed_preset("quine"), 2)).pattern();
    expect(quine.rfind("ALL!=W", 0) == 0, "quine pattern is " + quine);
    std::string pair = classify_model(build(seed_preset("unfounded-pair"), 2)).pattern();
    expect(pair == "ALL=W=HW!=WF", "unfounded-pair pattern is " + pair);
}

// --------------------------------------------------------------------------

struct Criterion {
    const char* name;
    double time_limit_s;  // 0 = no bound
    void (*run)();
};

const Criterion kCriteria[] = {
    {"census oracle equivalence (m=1..5)", 10.0, census_oracle_equivalence},
    {"theorem-2 finite-stage ratios", 5.0, theorem2_finite_stage},
    {"lemma 5(1) rank bound over V_5", 0.0, lemma5_rank_bound},
    {"lemma 5(2) realized values", 0.0, lemma5_realized_values},
    {"lemma 1 witness chain (n=0..16)", 1.0, lemma1_witness_chain},
    {"lemma 2 powerset stability", 0.0, lemma2_powerset},
    {"lemma 10(1) sigma needs w>1", 60.0, lemma10_sigma_needs_two},
    {"sigma spectrum realizable (nu=2..8)", 0.0, sigma_spectrum_realizable},
    {"conservativity of the graph solver", 0.0, conservativity},
    {"model construction (quine seed)", 0.0, model_construction},
    {"truncation pattern analogues", 0.0, pattern_analogues},
};

}  // namespace

int main() {
    int failures = 0;
    int index = 0;
    for (const auto& c : kCriteria) {
        ++index;
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            c.run();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (verdict == "PASS" && c.time_limit_s > 0 && secs > c.time_limit_s) {
            verdict = "FAIL";
            detail = "exceeded " + str(c.time_limit_s) + " s";
        }
        if (verdict == "FAIL") ++failures;
        std::printf("criterion %02d %s: %s (%.2f s)%s%s\n", index, c.name, verdict.c_str(), secs,
                    detail.empty() ? "" : " — ", detail.c_str());
    }
    if (failures) std::printf("%d of 11 criteria failed\n", failures);
    return failures ? 1 : 0;
}
