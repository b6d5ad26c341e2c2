// Command-line surface: enumeration, classification, census tables, graph
// solving, model building, the verification suite, and an interactive play
// loop. Exit codes: 0 success, 1 domain/input error, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "setgame/apg.hpp"
#include "setgame/census.hpp"
#include "setgame/classify.hpp"
#include "setgame/model.hpp"
#include "setgame/verify.hpp"

using nlohmann::json;
using namespace setgame;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Apg load_graph(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_graph_json(json::parse(text, nullptr, true, true));
    return parse_graph_text(text);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// --------------------------------------------------------------------------
// enumerate

int do_enumerate(unsigned rank_bound, const std::string& format) {
    Nat size = level_size(rank_bound, kEnumRankCap);
    std::size_t n = size.get_ui();
    if (format == "json") {
        json out = json::array();
        for (std::size_t c = 0; c < n; ++c)
            out.push_back({{"code", c}, {"set", to_braces(SetCode(c))}});
        std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "code,set\n";
        for (std::size_t c = 0; c < n; ++c)
            std::cout << c << ',' << csv_quote(to_braces(SetCode(c))) << '\n';
    } else {
        for (std::size_t c = 0; c < n; ++c)
            std::cout << c << ' ' << to_braces(SetCode(c)) << '\n';
    }
    return 0;
}

// --------------------------------------------------------------------------
// classify

int do_classify(const std::string& braces, const std::string& code_str,
                const std::string& format) {
    Classification cls{};
    std::string canonical;
    if (!braces.empty()) {
        HfStore store;
        Hf x = parse_braces(store, braces);
        cls = classify(x);
        canonical = to_braces(x);
    } else {
        SetCode c(code_str);
        if (sgn(c) < 0) throw DomainError("set codes are nonnegative");
        cls = classify(c);
        canonical = to_braces(c);
    }
    if (format == "json") {
        json out{{"set", canonical},
                 {"winner", cls.winner == Winner::I ? "I" : "II"},
                 {"w", cls.w}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << to_string(cls) << '\n';
    }
    return 0;
}

// --------------------------------------------------------------------------
// census (+ level-table cache)

std::map<unsigned, std::vector<unsigned>> load_cache(const std::string& path) {
    std::map<unsigned, std::vector<unsigned>> cache;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string tag;
        unsigned m;
        if (!(row >> tag >> m) || tag != "level") continue;
        std::vector<unsigned> ws;
        unsigned w;
        while (row >> w) ws.push_back(w);
        cache[m] = std::move(ws);
    }
    return cache;
}

CensusTable brute_with_cache(unsigned m, const std::string& cache_path) {
    if (cache_path.empty()) return census_brute(m);
    auto cache = load_cache(cache_path);
    std::vector<unsigned> ws;
    if (auto it = cache.find(m); it != cache.end() && Nat(it->second.size()) == level_size(m)) {
        ws = it->second;
    } else {
        for (const auto& c : classify_level(m)) ws.push_back(c.w);
        std::ofstream out(cache_path, std::ios::app);
        if (!out) throw DomainError("cannot write cache file '" + cache_path + "'");
        out << "level " << m;
        for (unsigned w : ws) out << ' ' << w;
        out << '\n';
    }
    CensusTable t{m, CensusMethod::brute, {}};
    for (unsigned w : ws) {
        if (w >= t.counts.size()) t.counts.resize(w + 1, 0);
        t.counts[w] += 1;
    }
    return t;
}

void print_census(const CensusTable& t, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(t).dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << to_csv(t);
    } else {
        std::cout << "census m=" << t.m << " (" << to_string(t.method) << ")\n";
        for (std::size_t nu = 0; nu < t.counts.size(); ++nu)
            std::cout << "nu " << nu << ": " << t.counts[nu].get_str() << '\n';
        std::cout << "total " << t.total().get_str() << '\n';
    }
}

int do_census(unsigned m, const std::string& method, const std::string& format,
              const std::string& cache_path) {
    if (method == "brute") {
        print_census(brute_with_cache(m, cache_path), format);
        return 0;
    }
    if (method == "formula") {
        print_census(census_formula(m), format);
        return 0;
    }
    CensusTable brute = brute_with_cache(m, cache_path);
    CensusTable formula = census_formula(m);
    print_census(brute, format);
    print_census(formula, format);
    bool match = brute.counts == formula.counts;
    if (format != "json" && format != "csv")
        std::cout << "match: " << (match ? "yes" : "NO") << '\n';
    if (!match) {
        std::cerr << "error: census tables disagree at m=" << m << '\n';
        return 1;
    }
    return 0;
}

// --------------------------------------------------------------------------
// prob

int do_prob(unsigned max_rank, const std::string& format) {
    if (format == "json") {
        json out = json::array();
        for (unsigned m = 1; m <= max_rank; ++m) out.push_back(to_json(prob_table(m)));
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (format == "csv") {
        std::cout << "m,nu,count,ratio_num,ratio_den\n";
        for (unsigned m = 1; m <= max_rank; ++m) {
            std::string csv = to_csv(census_formula(m));
            std::cout << csv.substr(csv.find('\n') + 1);
        }
        return 0;
    }
    for (unsigned m = 1; m <= max_rank; ++m) {
        RatioTable t = prob_table(m);
        std::cout << "prob m=" << m << " |V_m|=" << t.level_size.get_str() << '\n';
        for (std::size_t nu = 0; nu < t.ratios.size(); ++nu) {
            const Rat& r = t.ratios[nu];
            const Rat& d = t.limit_distance[nu];
            std::cout << "nu " << nu << ": " << r.get_num().get_str() << '/'
                      << r.get_den().get_str() << " (limit "
                      << ((nu == 1 || nu == 3) ? "1/2" : "0") << ", distance "
                      << d.get_num().get_str() << '/' << d.get_den().get_str() << ")\n";
        }
    }
    return 0;
}

// --------------------------------------------------------------------------
// graph solve | quotient | sigma

int do_graph_solve(const std::string& file, const std::string& format) {
    Apg g = load_graph(file);
    auto outcomes = solve(g);
    if (format == "json") {
        json out = json::object();
        for (std::uint32_t v = 0; v < g.size(); ++v) {
            json o{{"kind", outcomes[v].kind == OutcomeKind::DRAW
                                ? "DRAW"
                                : (outcomes[v].kind == OutcomeKind::WIN_I ? "WIN_I" : "WIN_II")}};
            if (outcomes[v].kind != OutcomeKind::DRAW) o["w"] = outcomes[v].w;
            out[g.ids[v]] = o;
        }
        std::cout << out.dump(2) << '\n';
    } else {
        for (std::uint32_t v = 0; v < g.size(); ++v)
            std::cout << g.ids[v] << ": " << to_string(outcomes[v]) << '\n';
    }
    return 0;
}

int do_graph_quotient(const std::string& file, const std::string& format) {
    Apg g = load_graph(file);
    auto q = bisim_quotient(g);
    if (format == "json") {
        json out = to_json(q.graph);
        json classes = json::object();
        for (std::uint32_t v = 0; v < g.size(); ++v)
            classes[g.ids[v]] = q.graph.ids[q.node_class[v]];
        out["class_of"] = classes;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << to_text(q.graph);
        for (std::uint32_t b = 0; b < q.graph.size(); ++b) {
            std::cout << "# class " << q.graph.ids[b] << ":";
            for (std::uint32_t v = 0; v < g.size(); ++v)
                if (q.node_class[v] == b) std::cout << ' ' << g.ids[v];
            std::cout << '\n';
        }
    }
    return 0;
}

int do_graph_sigma(const std::string& file, const std::string& nodes_csv,
                   std::optional<unsigned> value, bool win_ii, const std::string& format) {
    Apg g = load_graph(file);
    std::vector<char> member(g.size(), 0);
    std::string class_desc;
    if (!nodes_csv.empty()) {
        std::istringstream in(nodes_csv);
        std::string id;
        while (std::getline(in, id, ',')) member[g.node(id)] = 1;
        class_desc = "nodes " + nodes_csv;
    } else if (value) {
        auto outcomes = solve(g);
        for (std::uint32_t v = 0; v < g.size(); ++v)
            member[v] = outcomes[v].kind != OutcomeKind::DRAW && outcomes[v].w == *value;
        class_desc = "S_" + std::to_string(*value);
    } else if (win_ii) {
        auto outcomes = solve(g);
        for (std::uint32_t v = 0; v < g.size(); ++v)
            member[v] = outcomes[v].kind == OutcomeKind::WIN_II;
        class_desc = "W_II";
    } else {
        std::fill(member.begin(), member.end(), 1);
        class_desc = "all nodes";
    }
    auto witness = sigma(g, member);
    if (format == "json") {
        json out{{"class", class_desc},
                 {"holds", witness.has_value()},
                 {"witness", witness ? json(g.ids[*witness]) : json(nullptr)}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "sigma over " << class_desc << ": "
                  << (witness ? "holds, witness " + g.ids[*witness] : "does not hold") << '\n';
    }
    return 0;
}

// --------------------------------------------------------------------------
// model build | check

Apg load_seed(const std::string& preset, const std::string& file) {
    if (!preset.empty()) return seed_preset(preset);
    return load_graph(file);
}

int do_model_build(const Apg& seed, unsigned stages, std::size_t cap,
                   const std::string& format) {
    Model m = build(seed, stages, cap);
    if (format == "json")
        std::cout << to_json(m).dump(2) << '\n';
    else
        std::cout << to_text(m);
    return 0;
}

int do_model_check(const Apg& seed, unsigned stages, std::size_t cap) {
    SeedReport sr = check_seed(seed);
    std::cout << "seed: " << (sr.pass() ? "pass" : "FAIL") << '\n';
    for (const auto& v : sr.violations) std::cout << "  violation: " << v << '\n';
    for (const auto& n : sr.notes) std::cout << "  note: " << n << '\n';
    if (!sr.pass()) return 1;

    Model m = build(seed, stages, cap);
    std::cout << "build: " << m.graph.size() << " nodes through stage " << m.stages << '\n';
    std::cout << "end-extension: " << (check_end_extension(m) ? "true" : "false") << '\n';
    std::cout << "extensionality: " << (check_extensionality(m) ? "true" : "false") << '\n';
    for (unsigned alpha = 0; alpha + 1 <= m.stages; ++alpha)
        std::cout << "thickness(" << alpha << "): " << (check_thickness(m, alpha) ? "true" : "false")
                  << '\n';
    if (m.stages >= 1) {
        ReflectionReport rr = check_reflection(m);
        std::cout << "reflection (M_" << rr.first_stage << " vs M_" << rr.last_stage << "):\n";
        for (const auto& e : rr.entries)
            std::cout << "  " << e.statement << ": " << (e.at_first ? "true" : "false") << " / "
                      << (e.at_last ? "true" : "false")
                      << (e.agree() ? "  agree" : "  DISAGREE") << '\n';
        for (const auto& n : rr.notes) std::cout << "  note: " << n << '\n';
    }
    PatternReport pr = classify_model(m);
    std::cout << "pattern: " << pr.pattern() << " (all=" << pr.n_nodes << " w=" << pr.n_winning
              << " hw=" << pr.n_hereditarily << " wf=" << pr.n_wellfounded << ")\n";
    std::cout << "sigma spectrum:";
    for (unsigned w : pr.sigma_spectrum) std::cout << ' ' << w;
    std::cout << '\n';
    return 0;
}

// --------------------------------------------------------------------------
// verify

int do_verify(const std::string& suite, const std::string& format) {
    std::vector<std::string> ids;
    if (suite == "all") {
        ids = all_check_ids();
    } else {
        std::istringstream in(suite);
        std::string id;
        while (std::getline(in, id, ',')) ids.push_back(id);
    }
    auto results = run_suite(ids);
    bool failed = false;
    if (format == "json") {
        std::cout << report_json(results).dump(2) << '\n';
        for (const auto& r : results) failed |= r.status == "fail";
    } else {
        for (const auto& r : results) {
            std::cout << '[' << r.status << "] " << r.check << " (" << r.runtime_ms << " ms)\n";
            if (r.status == "fail") {
                failed = true;
                std::cout << "  evidence: " << r.evidence.dump() << '\n';
            }
        }
    }
    return failed ? 1 : 0;
}

// --------------------------------------------------------------------------
// play

struct PlayPosition {
    // Exactly one backend is active.
    std::optional<Hf> set;
    const Apg* graph = nullptr;
    std::uint32_t node = 0;
    const std::vector<Outcome>* outcomes = nullptr;

    bool terminal() const {
        return set ? set->empty() : graph->children[node].empty();
    }
    std::string name() const { return set ? to_braces(*set) : graph->ids[node]; }
    std::string value_note() const {
        if (set) return "w=" + std::to_string(classify(*set).w);
        const Outcome& o = (*outcomes)[node];
        return o.kind == OutcomeKind::DRAW ? "draw" : "w=" + std::to_string(o.w);
    }
};

int do_play(const std::string& braces, const std::string& graph_file,
            const std::string& start_node, unsigned max_plies) {
    HfStore store;
    Apg g;
    std::vector<Outcome> outcomes;
    PlayPosition pos;
    if (!braces.empty()) {
        pos.set = parse_braces(store, braces);
    } else {
        g = load_graph(graph_file);
        if (start_node.empty()) {
            if (!g.point) throw DomainError("graph has no point; pass --node");
            pos.node = *g.point;
        } else {
            pos.node = g.node(start_node);
        }
        outcomes = solve(g);
        pos.graph = &g;
        pos.outcomes = &outcomes;
    }

    // The engine takes the favored side; draws default it to II.
    bool engine_is_i;
    std::string opening;
    if (pos.set) {
        Classification c = classify(*pos.set);
        engine_is_i = c.winner == Winner::I;
        opening = to_string(c);
    } else {
        const Outcome& o = outcomes[pos.node];
        engine_is_i = o.kind == OutcomeKind::WIN_I;
        opening = to_string(o);
    }
    std::cout << "position " << pos.name() << ": " << opening << '\n';
    if (pos.terminal()) {
        std::cout << "the position is the empty set; the player to move has already lost\n";
        return 0;
    }
    std::cout << "you play " << (engine_is_i ? "II" : "I") << ", engine plays "
              << (engine_is_i ? "I" : "II") << '\n';

    auto list_moves = [&](const PlayPosition& p) {
        std::vector<PlayPosition> moves;
        if (p.set) {
            for (Hf e : p.set->elements()) {
                PlayPosition q;
                q.set = e;
                moves.push_back(q);
            }
        } else {
            for (auto c : p.graph->children[p.node]) {
                PlayPosition q = p;
                q.node = c;
                moves.push_back(q);
            }
        }
        return moves;
    };
    auto engine_pick = [&](const PlayPosition& p) -> PlayPosition {
        if (p.set) {
            PlayPosition q;
            q.set = optimal_move(*p.set);
            return q;
        }
        auto moves = list_moves(p);
        const Outcome& o = outcomes[p.node];
        if (o.kind == OutcomeKind::DRAW) {
            for (const auto& m : moves)
                if (outcomes[m.node].kind == OutcomeKind::DRAW) return m;
        } else {
            for (const auto& m : moves)
                if (outcomes[m.node].kind != OutcomeKind::DRAW && outcomes[m.node].w == o.w - 1)
                    return m;
        }
        return moves.front();
    };

    bool mover_is_i = true;
    for (unsigned ply = 1; max_plies == 0 || ply <= max_plies; ++ply, mover_is_i = !mover_is_i) {
        bool engine_turn = mover_is_i == engine_is_i;
        const char* mover = mover_is_i ? "I" : "II";
        PlayPosition next;
        if (engine_turn) {
            next = engine_pick(pos);
            std::cout << "ply " << ply << ": engine (" << mover << ") picks " << next.name()
                      << " [" << next.value_note() << "]\n";
        } else {
            auto moves = list_moves(pos);
            std::cout << "ply " << ply << ": your move from " << pos.name() << '\n';
            for (std::size_t i = 0; i < moves.size(); ++i)
                std::cout << "  [" << i << "] " << moves[i].name() << " ["
                          << moves[i].value_note() << "]\n";
            std::size_t choice = moves.size();
            std::string line;
            while (choice >= moves.size()) {
                std::cout << "move> " << std::flush;
                if (!std::getline(std::cin, line)) {
                    std::cout << "\ninput closed — game abandoned\n";
                    return 0;
                }
                if (line == "q" || line == "quit") {
                    std::cout << "game abandoned\n";
                    return 0;
                }
                try {
                    choice = std::stoul(line);
                } catch (...) {
                    choice = moves.size();
                }
                if (choice >= moves.size())
                    std::cout << "pick an index between 0 and " << moves.size() - 1 << '\n';
            }
            next = moves[choice];
            std::cout << "you (" << mover << ") picked " << next.name() << " ["
                      << next.value_note() << "]\n";
        }
        pos = next;
        if (pos.terminal()) {
            std::cout << (engine_turn ? "engine" : "you") << " (" << mover
                      << ") picked the empty set and wins in " << ply << " plies\n";
            return 0;
        }
    }
    std::cout << "ply cap reached — stopping (drawn line of play)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"membership-game toolkit: hereditarily finite sets, winning "
                 "classification, exact census, graphs with draws, model stages"};
    app.require_subcommand(1);

    std::string format = "text";
    unsigned rank_bound = 0, max_rank = 5, stages = 2, value_opt = 0, max_plies = 0;
    std::string braces, code_str, method = "both", cache_path, file, nodes_csv;
    std::string seed_name, seed_file, suite = "all", start_node;
    std::size_t cap = kModelNodeCap;
    bool win_ii = false;

    auto* cmd_enum = app.add_subcommand("enumerate", "list every set of rank <= M with its code");
    cmd_enum->add_option("--rank", rank_bound, "level bound M (0..5)")->required();
    cmd_enum->add_option("--format", format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* cmd_classify = app.add_subcommand("classify", "winner and value of one set");
    auto* opt_set = cmd_classify->add_option("--set", braces, "braces notation, e.g. {{},{{}}}");
    auto* opt_code = cmd_classify->add_option("--code", code_str, "Ackermann code (decimal)");
    opt_set->excludes(opt_code);
    cmd_classify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* cmd_census = app.add_subcommand("census", "value-class counts at level M");
    cmd_census->add_option("--rank", max_rank, "level M")->required();
    cmd_census->add_option("--method", method, "brute|formula|both")
        ->check(CLI::IsMember({"brute", "formula", "both"}));
    cmd_census->add_option("--cache", cache_path, "plain file caching level tables");
    cmd_census->add_option("--format", format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* cmd_prob = app.add_subcommand("prob", "exact value densities and limit distances");
    cmd_prob->add_option("--max-rank", max_rank, "levels 1..M")->required();
    cmd_prob->add_option("--format", format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* cmd_graph = app.add_subcommand("graph", "operations on pointed graphs");
    cmd_graph->require_subcommand(1);
    auto* cmd_solve = cmd_graph->add_subcommand("solve", "retrograde win/loss/draw outcomes");
    cmd_solve->add_option("--file", file, "graph file (text or JSON)")->required();
    cmd_solve->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    auto* cmd_quot = cmd_graph->add_subcommand("quotient", "coarsest bisimulation quotient");
    cmd_quot->add_option("--file", file, "graph file (text or JSON)")->required();
    cmd_quot->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    auto* cmd_sigma = cmd_graph->add_subcommand("sigma", "sigma property over a node class");
    cmd_sigma->add_option("--file", file, "graph file (text or JSON)")->required();
    cmd_sigma->add_option("--nodes", nodes_csv, "comma-separated node ids");
    auto* opt_value = cmd_sigma->add_option("--value", value_opt, "the class S_w");
    cmd_sigma->add_flag("--win-ii", win_ii, "the class of II-winning nodes");
    cmd_sigma->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* cmd_model = app.add_subcommand("model", "subset-adjunction stages over a seed");
    cmd_model->require_subcommand(1);
    auto* cmd_build = cmd_model->add_subcommand("build", "run the construction and print it");
    auto* cmd_check = cmd_model->add_subcommand("check", "structural and reflection checks");
    for (auto* c : {cmd_build, cmd_check}) {
        c->add_option("--seed", seed_name, "preset: wf|quine|unfounded-pair");
        c->add_option("--file", seed_file, "seed graph file");
        c->add_option("--stages", stages, "stages to build (default 2)");
        c->add_option("--cap", cap, "node cap per stage");
    }
    cmd_build->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* cmd_verify = app.add_subcommand("verify", "run the self-audit suite");
    cmd_verify->add_option("--suite", suite, "'all' or comma-separated check ids");
    cmd_verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* cmd_play = app.add_subcommand("play", "interactive game against the engine");
    cmd_play->add_option("--set", braces, "start position in braces notation");
    cmd_play->add_option("--graph", file, "start from a graph file");
    cmd_play->add_option("--node", start_node, "start node (defaults to the point)");
    cmd_play->add_option("--max-plies", max_plies, "stop after this many plies (0 = no cap)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_enum) return do_enumerate(rank_bound, format);
        if (*cmd_classify) {
            if (braces.empty() && code_str.empty()) {
                std::cerr << "usage error: classify needs --set or --code\n";
                return 2;
            }
            return do_classify(braces, code_str, format);
        }
        if (*cmd_census) return do_census(max_rank, method, format, cache_path);
        if (*cmd_prob) return do_prob(max_rank, format);
        if (*cmd_solve) return do_graph_solve(file, format);
        if (*cmd_quot) return do_graph_quotient(file, format);
        if (*cmd_sigma)
            return do_graph_sigma(file, nodes_csv,
                                  *opt_value ? std::optional<unsigned>(value_opt) : std::nullopt,
                                  win_ii, format);
        if (*cmd_build || *cmd_check) {
            if (seed_name.empty() == seed_file.empty()) {
                std::cerr << "usage error: model commands need exactly one of --seed or --file\n";
                return 2;
            }
            Apg seed = load_seed(seed_name, seed_file);
            if (*cmd_build) return do_model_build(seed, stages, cap, format);
            return do_model_check(seed, stages, cap);
        }
        if (*cmd_verify) return do_verify(suite, format);
        if (*cmd_play) {
            if (braces.empty() && file.empty()) {
                std::cerr << "usage error: play needs --set or --graph\n";
                return 2;
            }
            return do_play(braces, file, start_node, max_plies);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
