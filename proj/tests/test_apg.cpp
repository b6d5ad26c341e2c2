#include <doctest.h>

#include <set>
#include <string>

#include "setgame/apg.hpp"
#include "setgame/classify.hpp"
#include "setgame/hf.hpp"

using namespace setgame;

namespace {

Apg graph_of(const char* text) { return parse_graph_text(text); }

}  // namespace

TEST_CASE("text parsing, printing and errors") {
    Apg g = graph_of("# a quine atom and the empty set\n"
                     "node a: a\n"
                     "node e:\n"
                     "point a\n"
                     "stage a 0\n");  // model-export stage lines are ignored
    CHECK(g.size() == 2);
    CHECK(g.ids[0] == "a");
    CHECK(g.children[0] == std::vector<std::uint32_t>{0});
    CHECK(g.children[1].empty());
    REQUIRE(g.point.has_value());
    CHECK(*g.point == 0);
    CHECK(to_text(g) == "node a: a\nnode e:\npoint a\n");

    CHECK_THROWS_AS(graph_of("node a: b\n"), ParseError);     // unknown child
    CHECK_THROWS_AS(graph_of("node a:\nnode a:\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(graph_of("point x\n"), ParseError);       // unknown point
    CHECK_THROWS_AS(graph_of("nod a:\n"), ParseError);        // bad statement
    CHECK_THROWS_AS(graph_of("node a-b:\n"), ParseError);     // bad id
    // Forward references are fine.
    CHECK(graph_of("node a: b\nnode b:\n").size() == 2);
}

TEST_CASE("json round trip") {
    Apg g = graph_of("node x: y z\nnode y: z\nnode z:\npoint x\n");
    Apg back = parse_graph_json(to_json(g));
    CHECK(to_text(back) == to_text(g));
}

TEST_CASE("solver on the spec positions") {
    // x with children {Omega, {}} is an immediate win.
    Apg g1 = graph_of("node x: omega e\nnode omega: omega\nnode e:\npoint x\n");
    auto o1 = solve(g1);
    CHECK(o1[g1.node("x")] == Outcome{OutcomeKind::WIN_I, 1});
    CHECK(o1[g1.node("omega")].kind == OutcomeKind::DRAW);
    CHECK(o1[g1.node("e")] == Outcome{OutcomeKind::WIN_II, 0});

    // x = {u}, u = {u, {}}: u is WIN_I via {}, x is WIN_II.
    Apg g2 = graph_of("node x: u\nnode u: u e\nnode e:\npoint x\n");
    auto o2 = solve(g2);
    CHECK(o2[g2.node("u")] == Outcome{OutcomeKind::WIN_I, 1});
    CHECK(o2[g2.node("x")] == Outcome{OutcomeKind::WIN_II, 2});

    // x = {v, x, u}, v = {u}, u = {u, {}}.
    Apg g3 = graph_of("node x: v x u\nnode v: u\nnode u: u e\nnode e:\npoint x\n");
    auto o3 = solve(g3);
    CHECK(o3[g3.node("x")] == Outcome{OutcomeKind::WIN_I, 3});
    CHECK(o3[g3.node("v")] == Outcome{OutcomeKind::WIN_II, 2});
    CHECK(o3[g3.node("u")] == Outcome{OutcomeKind::WIN_I, 1});
}

TEST_CASE("a graph with no sink is all draws") {
    Apg g = graph_of("node a: b\nnode b: c\nnode c: a b\n");
    for (const auto& o : solve(g)) CHECK(o.kind == OutcomeKind::DRAW);
}

TEST_CASE("solver matches classify on well-founded graphs") {
    HfStore store;
    for (unsigned long c = 0; c < 256; ++c) {
        Hf x = from_code(store, SetCode(c));
        // Build the membership graph of tc({x}).
        Apg g;
        auto closure = tc(x);
        closure.push_back(x);
        std::vector<std::uint32_t> node_of(store.size(), 0);
        for (const Hf& t : closure) node_of[t.id()] = g.add_node("s" + std::to_string(t.id()));
        for (const Hf& t : closure)
            for (const Hf& e : t.elements()) g.add_edge(node_of[t.id()], node_of[e.id()]);
        auto outcomes = solve(g);
        Classification cls = classify(x);
        const Outcome& o = outcomes[node_of[x.id()]];
        CHECK(o.kind == (cls.winner == Winner::I ? OutcomeKind::WIN_I : OutcomeKind::WIN_II));
        CHECK(o.w == cls.w);
    }
}

TEST_CASE("bisimulation quotient merges duplicate sinks") {
    Apg g = graph_of("node x: a b\nnode a:\nnode b:\npoint x\n");
    auto q = bisim_quotient(g);
    CHECK(q.graph.size() == 2);
    CHECK(q.node_class[g.node("a")] == q.node_class[g.node("b")]);
    CHECK(q.node_class[g.node("x")] != q.node_class[g.node("a")]);
    CHECK(q.graph.children[q.node_class[g.node("x")]].size() == 1);
}

TEST_CASE("bisimulation quotient merges twin quine atoms") {
    Apg g = graph_of("node p: p\nnode q: q\n");
    auto q = bisim_quotient(g);
    CHECK(q.graph.size() == 1);
    CHECK(q.graph.children[0] == std::vector<std::uint32_t>{0});
}

TEST_CASE("quotient preserves outcomes") {
    Apg g = graph_of("node x: v x u\nnode v: u\nnode u: u e\nnode e:\n"
                     "node x2: v2 x2 u2\nnode v2: u2\nnode u2: u2 e2\nnode e2:\npoint x\n");
    auto q = bisim_quotient(g);
    CHECK(q.graph.size() == 4);  // the two copies collapse
    auto before = solve(g);
    auto after = solve(q.graph);
    for (std::uint32_t v = 0; v < g.size(); ++v) CHECK(before[v] == after[q.node_class[v]]);
}

TEST_CASE("sigma property and its least witness") {
    // v = {u}, u = {u, e}: children(v) = {u}, children(u) = {u, e} share u.
    Apg g = graph_of("node x: v x u\nnode v: u\nnode u: u e\nnode e:\npoint x\n");
    std::vector<char> all(g.size(), 1);
    auto w = sigma(g, all);
    REQUIRE(w.has_value());
    CHECK(g.ids[*w] == "x");  // x itself: children {v,x,u}; v,x,u each meet them

    std::vector<char> just_ve(g.size(), 0);
    just_ve[g.node("v")] = 1;
    just_ve[g.node("e")] = 1;
    auto w2 = sigma(g, just_ve);
    REQUIRE(w2.has_value());
    CHECK(g.ids[*w2] == "v");

    std::vector<char> just_e(g.size(), 0);
    just_e[g.node("e")] = 1;
    CHECK(!sigma(g, just_e).has_value());  // the empty set never witnesses sigma

    // Well-founded sets never witness sigma: their membership graphs are
    // acyclic, so some child is disjoint from the children.
    Apg wf = graph_of("node a: b c\nnode b: c\nnode c:\n");
    std::vector<char> aw(wf.size(), 1);
    CHECK(!sigma(wf, aw).has_value());
}

TEST_CASE("relativized foundation holds exactly on sigma-free classes") {
    Apg g = graph_of("node u: u e\nnode e:\nnode s: u\n");
    std::vector<char> all(g.size(), 1);
    CHECK(!relativized_foundation(g, all));  // s = {u} has no disjoint child in C
    std::vector<char> no_s(g.size(), 1);
    no_s[g.node("s")] = 0;
    CHECK(relativized_foundation(g, no_s));  // u's child e is disjoint from {u,e}... within C
}

TEST_CASE("wellfoundedness is per-node reachability of cycles") {
    Apg g = graph_of("node x: omega e\nnode omega: omega\nnode e:\nnode y: e\n");
    CHECK(!is_wellfounded(g, g.node("x")));
    CHECK(!is_wellfounded(g, g.node("omega")));
    CHECK(is_wellfounded(g, g.node("e")));
    CHECK(is_wellfounded(g, g.node("y")));
}

TEST_CASE("hereditarily winning excludes nodes seeing a draw") {
    Apg g = graph_of("node x: omega e\nnode omega: omega\nnode e:\npoint x\n");
    auto outcomes = solve(g);
    auto hw = hw_nodes(g, outcomes);
    CHECK(!hw[g.node("x")]);      // winning but sees the draw omega
    CHECK(!hw[g.node("omega")]);
    CHECK(hw[g.node("e")]);
    CHECK(outcomes[g.node("x")].kind == OutcomeKind::WIN_I);
}

TEST_CASE("pattern report nests the four classes") {
    Apg g = graph_of("node x: omega e\nnode omega: omega\nnode e:\npoint x\n");
    PatternReport r = pattern_report(g);
    CHECK(r.n_nodes == 3);
    CHECK(r.n_winning == 2);
    CHECK(r.n_hereditarily == 1);
    CHECK(r.n_wellfounded == 1);
    CHECK(r.pattern() == "ALL!=W!=HW=WF");

    Apg wf = graph_of("node a: b\nnode b:\n");
    CHECK(pattern_report(wf).pattern() == "ALL=W=HW=WF");
}

TEST_CASE("for_each_graph enumerates all children assignments") {
    std::size_t count = 0;
    for_each_graph(2, [&](const Apg& g) {
        CHECK(g.size() == 2);
        REQUIRE(g.point.has_value());
        ++count;
        return true;
    });
    CHECK(count == 16);  // 2^(2*2) adjacency masks

    // Early stop.
    count = 0;
    for_each_graph(2, [&](const Apg&) { return ++count < 5; });
    CHECK(count == 5);
}

TEST_CASE("sigma witnesses exist for every nu in 2..8") {
    for (unsigned nu = 2; nu <= 8; ++nu) {
        Apg g = sigma_witness(nu);
        REQUIRE(g.point.has_value());
        auto outcomes = solve(g);
        CHECK(outcomes[*g.point].kind != OutcomeKind::DRAW);
        CHECK(outcomes[*g.point].w == nu);
        std::vector<char> member(g.size(), 0);
        member[*g.point] = 1;
        auto w = sigma(g, member);
        REQUIRE(w.has_value());
        CHECK(*w == *g.point);
        // Minimality in node count: nu+1 nodes are necessary.
        CHECK(g.size() == nu + 1);
    }
    CHECK_THROWS_AS(sigma_witness(0), DomainError);
    CHECK_THROWS_AS(sigma_witness(1), DomainError);
}

TEST_CASE("no sigma node has w below 2 in small graphs") {
    for (unsigned n = 1; n <= 3; ++n) {
        for_each_graph(n, [&](const Apg& g) {
            auto outcomes = solve(g);
            for (std::uint32_t v = 0; v < g.size(); ++v) {
                std::vector<char> member(g.size(), 0);
                member[v] = 1;
                if (sigma(g, member) && outcomes[v].kind != OutcomeKind::DRAW)
                    CHECK(outcomes[v].w >= 2);
            }
            return true;
        });
    }
}
