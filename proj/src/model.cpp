#include "setgame/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "setgame/nat.hpp"

namespace setgame {

SeedReport check_seed(const Apg& seed) {
    SeedReport r;
    for (std::uint32_t v = 0; v < seed.size(); ++v)
        if (seed.children[v].empty()) {
            r.has_empty_set = true;
            break;
        }
    if (!r.has_empty_set)
        r.violations.push_back("no node represents the empty set (every node has children)");

    std::set<std::vector<std::uint32_t>> child_sets;
    r.extensional = true;
    for (std::uint32_t v = 0; v < seed.size(); ++v) {
        if (!child_sets.insert(seed.children[v]).second) {
            r.extensional = false;
            r.violations.push_back("nodes '" + seed.ids[v] +
                                   "' and an earlier node share the same child set");
        }
    }
    r.notes.push_back(
        "conditions (i)/(ii) — set-sized stages and representation of every subset over the "
        "final universe — hold for every finite graph and are recorded, not computed");
    return r;
}

Apg Model::truncation(unsigned alpha) const {
    Apg g;
    std::vector<std::uint32_t> remap(graph.size(), UINT32_MAX);
    for (std::uint32_t v = 0; v < graph.size(); ++v)
        if (stage[v] <= alpha) remap[v] = g.add_node(graph.ids[v]);
    for (std::uint32_t v = 0; v < graph.size(); ++v) {
        if (stage[v] > alpha) continue;
        for (auto c : graph.children[v])
            if (remap[c] != UINT32_MAX) g.add_edge(remap[v], remap[c]);
    }
    if (graph.point && stage[*graph.point] <= alpha) g.point = remap[*graph.point];
    return g;
}

Model build(const Apg& seed, unsigned stages, std::size_t cap) {
    SeedReport sr = check_seed(seed);
    if (!sr.pass()) {
        std::string why;
        for (const auto& v : sr.violations) why += (why.empty() ? "" : "; ") + v;
        throw DomainError("seed rejected: " + why);
    }
    Model m;
    m.graph = seed;
    m.stage.assign(seed.size(), 0);
    m.stages = 0;

    for (unsigned next_stage = 1; next_stage <= stages; ++next_stage) {
        std::size_t universe = m.graph.size();

        // Child sets already realized; extensionality makes them unique.
        std::set<std::vector<std::uint32_t>> represented;
        std::size_t represented_nonempty = 0;
        for (std::uint32_t v = 0; v < universe; ++v) {
            represented.insert(m.graph.children[v]);
            if (!m.graph.children[v].empty()) ++represented_nonempty;
        }

        Nat projected = Nat(universe) + (pow2(universe) - 1 - Nat(represented_nonempty));
        if (projected > Nat(static_cast<unsigned long>(cap)))
            throw DomainError("stage " + std::to_string(next_stage) + " would have " +
                              projected.get_str() + " nodes, over the cap of " +
                              std::to_string(cap));
        if (universe >= 64)
            throw DomainError("stage " + std::to_string(next_stage) +
                              ": universe too large to enumerate subsets");

        // Canonical subset order: by size, then lexicographic on member
        // indices — numeric order of the subset masks grouped by popcount.
        unsigned bits = static_cast<unsigned>(universe);
        unsigned long fresh = 0;
        for (unsigned size = 1; size <= bits; ++size) {
            std::uint64_t mask = (1ull << size) - 1;
            std::uint64_t limit = 1ull << bits;
            while (mask < limit) {
                std::vector<std::uint32_t> members;
                for (unsigned b = 0; b < bits; ++b)
                    if (mask >> b & 1) members.push_back(b);
                if (!represented.count(members)) {
                    std::string name =
                        "s" + std::to_string(next_stage) + "n" + std::to_string(fresh++);
                    if (m.graph.index.count(name))
                        throw DomainError("fresh node name '" + name +
                                          "' collides with a seed node (names s<k>n<i> are "
                                          "reserved)");
                    auto idx = m.graph.add_node(name);
                    for (auto mem : members) m.graph.add_edge(idx, mem);
                    m.stage.push_back(next_stage);
                }
                std::uint64_t c = mask & (~mask + 1);
                std::uint64_t r = mask + c;
                std::uint64_t next = (((r ^ mask) >> 2) / c) | r;
                if (next <= mask) break;
                mask = next;
            }
        }
        m.stages = next_stage;
    }
    return m;
}

bool check_end_extension(const Model& m) {
    // E_b restricted to targets in M_a equals E_a for a < b <= k, which for
    // a concrete stage tagging is: no member (child) of a node may come from
    // a later stage than the node itself.
    for (std::uint32_t v = 0; v < m.graph.size(); ++v)
        for (auto c : m.graph.children[v])
            if (m.stage[c] > m.stage[v]) return false;
    return true;
}

bool check_extensionality(const Model& m) {
    for (unsigned alpha = 0; alpha <= m.stages; ++alpha) {
        std::set<std::vector<std::uint32_t>> seen;
        for (std::uint32_t v = 0; v < m.graph.size(); ++v) {
            if (m.stage[v] > alpha) continue;
            std::vector<std::uint32_t> members;
            for (auto c : m.graph.children[v])
                if (m.stage[c] <= alpha) members.push_back(c);
            if (!seen.insert(std::move(members)).second) return false;
        }
    }
    return true;
}

bool check_thickness(const Model& m, unsigned alpha) {
    if (alpha + 1 > m.stages)
        throw DomainError("thickness at stage " + std::to_string(alpha) +
                          " needs stage " + std::to_string(alpha + 1) + " built (have " +
                          std::to_string(m.stages) + ")");
    std::vector<std::uint32_t> level;  // nodes of M_alpha, ascending index
    for (std::uint32_t v = 0; v < m.graph.size(); ++v)
        if (m.stage[v] <= alpha) level.push_back(v);

    std::set<std::vector<std::uint32_t>> realized;
    for (std::uint32_t v = 0; v < m.graph.size(); ++v)
        if (m.stage[v] <= alpha + 1) realized.insert(m.graph.children[v]);

    if (level.size() >= 64) throw DomainError("thickness check: stage too large to enumerate");
    for (std::uint64_t mask = 1; mask < (1ull << level.size()); ++mask) {
        std::vector<std::uint32_t> subset;
        for (std::size_t b = 0; b < level.size(); ++b)
            if (mask >> b & 1) subset.push_back(level[b]);
        std::sort(subset.begin(), subset.end());
        if (!realized.count(subset)) return false;
    }
    return true;
}

bool ReflectionReport::all_agree() const {
    for (const auto& e : entries)
        if (!e.agree()) return false;
    return true;
}

namespace {

// Statement battery over one finite stage graph.
struct StageFacts {
    std::vector<bool> sigma_w_even;   // sigma(W_{2g}) for 2g = 0, 2, ...
    bool sigma_w_ii = false;          // sigma over all II-winning nodes
    bool foundation_w = false;        // relativized foundation over W
    std::vector<bool> sigma_s_even;   // sigma(S_{2g}) for 2g = 0, 2, ...
};

StageFacts stage_facts(const Apg& g, unsigned max_even) {
    StageFacts f;
    auto outcomes = solve(g);
    std::size_t n = g.size();
    for (unsigned w = 0; w <= max_even; w += 2) {
        // W_{2g}: II-winning nodes of value <= 2g; S_{2g}: value exactly 2g.
        std::vector<char> w_class(n, 0), s_class(n, 0);
        for (std::uint32_t v = 0; v < n; ++v) {
            if (outcomes[v].kind != OutcomeKind::WIN_II) continue;
            if (outcomes[v].w <= w) w_class[v] = 1;
            if (outcomes[v].w == w) s_class[v] = 1;
        }
        f.sigma_w_even.push_back(sigma(g, w_class).has_value());
        f.sigma_s_even.push_back(sigma(g, s_class).has_value());
    }
    std::vector<char> win_ii(n, 0), winning(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        win_ii[v] = outcomes[v].kind == OutcomeKind::WIN_II;
        winning[v] = outcomes[v].kind != OutcomeKind::DRAW;
    }
    f.sigma_w_ii = sigma(g, win_ii).has_value();
    f.foundation_w = relativized_foundation(g, winning);
    return f;
}

}  // namespace

ReflectionReport check_reflection(const Model& m) {
    if (m.stages < 1) throw DomainError("reflection needs at least one built stage");
    ReflectionReport r;
    r.first_stage = 1;
    r.last_stage = m.stages;

    Apg first = m.truncation(1);
    Apg last = m.truncation(m.stages);

    auto last_outcomes = solve(last);
    unsigned max_even = 0;
    for (const auto& o : last_outcomes)
        if (o.kind == OutcomeKind::WIN_II) max_even = std::max(max_even, o.w);
    max_even -= max_even % 2;

    StageFacts ff = stage_facts(first, max_even);
    StageFacts lf = stage_facts(last, max_even);

    for (unsigned i = 0; i * 2 <= max_even; ++i)
        r.entries.push_back(
            {"sigma(W_" + std::to_string(2 * i) + ")", ff.sigma_w_even[i], lf.sigma_w_even[i]});
    r.entries.push_back({"sigma(W_II)", ff.sigma_w_ii, lf.sigma_w_ii});
    r.entries.push_back({"foundation^W", ff.foundation_w, lf.foundation_w});
    for (unsigned i = 0; i * 2 <= max_even; ++i)
        r.entries.push_back(
            {"sigma(S_" + std::to_string(2 * i) + ")", ff.sigma_s_even[i], lf.sigma_s_even[i]});

    r.notes.push_back("truncation proxy: compares stage (M_1, E_1) with stage (M_" +
                      std::to_string(m.stages) + ", E_" + std::to_string(m.stages) +
                      "), not with the class-sized limit of the construction");
    return r;
}

PatternReport classify_model(const Model& m) { return pattern_report(m.truncation(m.stages)); }

Apg seed_preset(const std::string& name) {
    Apg g;
    if (name == "wf") {
        auto e = g.add_node("e");
        auto t = g.add_node("t");
        g.add_edge(t, e);
        g.point = t;
    } else if (name == "quine") {
        auto a = g.add_node("a");
        g.add_node("e");
        g.add_edge(a, a);
        g.point = a;
    } else if (name == "unfounded-pair") {
        auto u = g.add_node("u");
        auto e = g.add_node("e");
        g.add_edge(u, u);
        g.add_edge(u, e);
        g.point = u;
    } else {
        throw DomainError("unknown seed preset '" + name + "' (have: wf, quine, unfounded-pair)");
    }
    return g;
}

std::vector<std::string> seed_preset_names() { return {"wf", "quine", "unfounded-pair"}; }

std::string to_text(const Model& m) {
    std::string out = to_text(m.graph);
    std::ostringstream extra;
    for (std::uint32_t v = 0; v < m.graph.size(); ++v)
        extra << "stage " << m.graph.ids[v] << ' ' << m.stage[v] << '\n';
    return out + extra.str();
}

nlohmann::json to_json(const Model& m) {
    nlohmann::json j = to_json(m.graph);
    nlohmann::json stage = nlohmann::json::object();
    for (std::uint32_t v = 0; v < m.graph.size(); ++v) stage[m.graph.ids[v]] = m.stage[v];
    j["stage"] = stage;
    j["stages"] = m.stages;
    return j;
}

}  // namespace setgame
