#include <doctest.h>

#include <cstdlib>
#include <set>

#include "setgame/classify.hpp"
#include "setgame/errors.hpp"
#include "setgame/hf.hpp"

using namespace setgame;

TEST_CASE("small positions classify per the game rules") {
    // {} loses for the mover: no move at all.
    CHECK(classify(SetCode(0)) == Classification{Winner::II, 0});
    // {{}}: mover picks {} and wins.
    CHECK(classify(SetCode(1)) == Classification{Winner::I, 1});
    // {{{}}}: the only move hands the opponent {{}}.
    CHECK(classify(SetCode(2)) == Classification{Winner::II, 2});
    CHECK(classify(SetCode(3)) == Classification{Winner::I, 1});
    // {{},{{{}}}}: the even-valued element {} still wins immediately.
    CHECK(classify(SetCode(5)) == Classification{Winner::I, 1});
    CHECK(to_string(classify(SetCode(5))) == "winner=I w=1");
}

TEST_CASE("w has the defining recurrence over V_5") {
    auto level = classify_level(5);
    REQUIRE(level.size() == 65536);
    for (unsigned long c = 0; c < 65536; ++c) {
        const auto& cls = level[c];
        bool any_even = false;
        unsigned best_even = 0, max_odd = 0;
        unsigned long rest = c;
        while (rest) {
            unsigned long bit = rest & (~rest + 1);
            unsigned b = 0;
            for (unsigned long v = bit; v > 1; v >>= 1) ++b;
            rest ^= bit;
            unsigned we = level[b].w;
            if (we % 2 == 0) {
                if (!any_even || we < best_even) best_even = we;
                any_even = true;
            } else {
                max_odd = std::max(max_odd, we);
            }
        }
        if (any_even) {
            CHECK(cls.winner == Winner::I);
            CHECK(cls.w == best_even + 1);
        } else {
            CHECK(cls.winner == Winner::II);
            CHECK(cls.w == (c ? max_odd + 1 : 0));
        }
        CHECK((cls.w % 2 == 1) == (cls.winner == Winner::I));
    }
}

TEST_CASE("classify agrees between codes and nodes") {
    HfStore store;
    for (unsigned long c = 0; c < 4096; ++c)
        CHECK(classify(from_code(store, SetCode(c))) == classify(SetCode(c)));
}

TEST_CASE("classify_level rejects non-enumerable ranks") {
    CHECK_THROWS_AS(classify_level(6), DomainError);
}

TEST_CASE("classify_level is identical across thread counts") {
    auto base = classify_level(5);
    for (const char* threads : {"1", "3", "16"}) {
        setenv("SETGAME_THREADS", threads, 1);
        auto out = classify_level(5);
        bool same = out.size() == base.size();
        for (std::size_t i = 0; same && i < out.size(); ++i) same = out[i] == base[i];
        CHECK(same);
    }
    unsetenv("SETGAME_THREADS");
}

TEST_CASE("witness family realizes every index") {
    HfStore store;
    for (unsigned n = 0; n <= kWitnessBound; ++n) {
        Hf z = witness(store, n);
        CHECK(classify(z).w == n);
        CHECK(rank(z) == n);  // Lemma 5(1) is tight on the witness chain
    }
    CHECK_THROWS_AS(witness(store, kWitnessBound + 1), DomainError);
}

TEST_CASE("witness chain has the prescribed shape") {
    HfStore store;
    Hf z0 = witness(store, 0);
    CHECK(z0 == store.empty());
    Hf z1 = witness(store, 1);
    CHECK(z1 == store.singleton(z0));
    Hf z4 = witness(store, 4);
    // z_{2k} collects the odd witnesses below it.
    CHECK(z4 == store.make({witness(store, 1), witness(store, 3)}));
    Hf z5 = witness(store, 5);
    CHECK(z5 == store.singleton(z4));
}

TEST_CASE("optimal_move decreases w by one and preserves the win") {
    HfStore store;
    for (unsigned long c = 1; c < 4096; ++c) {
        Hf x = from_code(store, SetCode(c));
        Classification cx = classify(x);
        Hf m = optimal_move(x);
        CHECK(classify(m).w == cx.w - 1);
        bool found = false;
        for (Hf e : x.elements()) found |= e == m;
        CHECK(found);
    }
    CHECK_THROWS_AS(optimal_move(store.empty()), DomainError);
}

TEST_CASE("realized w values over V_m are exactly 0..m-1") {
    for (unsigned m = 1; m <= 5; ++m) {
        std::set<unsigned> seen;
        for (const auto& cls : classify_level(m)) seen.insert(cls.w);
        std::set<unsigned> expect;
        for (unsigned nu = 0; nu < m; ++nu) expect.insert(nu);
        CHECK(seen == expect);
    }
}
