#include "setgame/classify.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_map>

#include "setgame/parallel.hpp"

namespace setgame {

namespace {

// Value recursion shared by every entry point: given the values of all
// elements, a position with an even-valued element is WIN_I at 1 + the least
// such value; otherwise all elements are odd and the position is WIN_II at
// 1 + the largest (0 when empty).
template <typename Range, typename ValueOf>
unsigned combine(const Range& elems, ValueOf&& value_of) {
    unsigned best_even = std::numeric_limits<unsigned>::max();
    unsigned max_w = 0;
    bool any = false;
    for (const auto& e : elems) {
        unsigned w = value_of(e);
        any = true;
        if (w % 2 == 0) best_even = std::min(best_even, w);
        max_w = std::max(max_w, w);
    }
    if (!any) return 0;
    if (best_even != std::numeric_limits<unsigned>::max()) return best_even + 1;
    return max_w + 1;
}

Classification from_w(unsigned w) { return {w % 2 ? Winner::I : Winner::II, w}; }

// Iterative post-order: handles towers as deep as the parser allows without
// touching the call stack.
unsigned value_of_node(const HfStore& s, std::uint32_t root,
                       std::unordered_map<std::uint32_t, unsigned>& memo) {
    std::vector<std::pair<std::uint32_t, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [id, expanded] = stack.back();
        stack.pop_back();
        if (memo.count(id)) continue;
        if (!expanded) {
            stack.push_back({id, true});
            for (auto e : s.elements_of(id))
                if (!memo.count(e)) stack.push_back({e, false});
            continue;
        }
        unsigned w = combine(s.elements_of(id), [&](std::uint32_t e) { return memo.at(e); });
        memo.emplace(id, w);
    }
    return memo.at(root);
}

unsigned value_of_position(unsigned long p, std::unordered_map<unsigned long, unsigned>& memo) {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    std::vector<unsigned long> bits;
    for (unsigned long q = p; q; q &= q - 1)
        bits.push_back(static_cast<unsigned long>(std::countr_zero(q)));
    unsigned w = combine(bits, [&](unsigned long b) { return value_of_position(b, memo); });
    memo.emplace(p, w);
    return w;
}

}  // namespace

std::string to_string(const Classification& c) {
    return std::string("winner=") + (c.winner == Winner::I ? "I" : "II") +
           " w=" + std::to_string(c.w);
}

Classification classify(Hf x) {
    std::unordered_map<std::uint32_t, unsigned> memo;
    return from_w(value_of_node(x.store(), x.id(), memo));
}

Classification classify(const SetCode& c) {
    if (sgn(c) < 0) throw DomainError("set codes are nonnegative");
    std::unordered_map<unsigned long, unsigned> memo;
    std::vector<unsigned long> bits;
    constexpr mp_bitcnt_t kNoBit = ~static_cast<mp_bitcnt_t>(0);
    for (mp_bitcnt_t i = mpz_scan1(c.get_mpz_t(), 0); i != kNoBit;
         i = mpz_scan1(c.get_mpz_t(), i + 1))
        bits.push_back(static_cast<unsigned long>(i));
    return from_w(combine(bits, [&](unsigned long b) { return value_of_position(b, memo); }));
}

std::vector<Classification> classify_level(unsigned m, unsigned cap) {
    if (m > cap || m > kEnumRankCap)
        throw DomainError("enumeration of V_" + std::to_string(m) +
                          " is beyond the enumeration cap (" +
                          std::to_string(std::min(cap, kEnumRankCap)) + ")");
    std::size_t count = level_size(m).get_ui();
    std::vector<Classification> out(count);
    // Bit positions of c are < c, so ascending order is a valid schedule;
    // codes >= 16 only have positions < 16 (elements of rank-5 sets have
    // rank <= 4), which makes the tail chunk-parallel once the V_4 prefix
    // is done.
    std::size_t prefix = std::min<std::size_t>(count, 16);
    for (std::size_t c = 0; c < prefix; ++c) {
        auto bits_w = [&](unsigned long b) { return out[b].w; };
        std::vector<unsigned long> bits;
        for (unsigned long q = c; q; q &= q - 1)
            bits.push_back(static_cast<unsigned long>(std::countr_zero(q)));
        out[c] = from_w(combine(bits, bits_w));
    }
    if (count > prefix) {
        parallel_for(count - prefix, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                std::size_t c = prefix + i;
                std::vector<unsigned long> bits;
                for (unsigned long q = c; q; q &= q - 1)
                    bits.push_back(static_cast<unsigned long>(std::countr_zero(q)));
                out[c] = from_w(combine(bits, [&](unsigned long b) { return out[b].w; }));
            }
        });
    }
    return out;
}

Hf witness(HfStore& store, unsigned n, unsigned bound) {
    if (n > bound)
        throw DomainError("witness index " + std::to_string(n) + " exceeds the bound " +
                          std::to_string(bound));
    std::vector<Hf> z;
    z.reserve(n + 1);
    z.push_back(store.empty());
    for (unsigned i = 1; i <= n; ++i) {
        if (i % 2 == 1) {
            z.push_back(store.singleton(z[i - 1]));
        } else {
            std::vector<Hf> odds;
            for (unsigned j = 1; j < i; j += 2) odds.push_back(z[j]);
            z.push_back(store.make(odds));
        }
    }
    return z[n];
}

Hf optimal_move(Hf x) {
    auto elems = x.elements();
    if (elems.empty()) throw DomainError("no move: the position is the empty set");
    const HfStore& s = x.store();
    std::unordered_map<std::uint32_t, unsigned> memo;
    unsigned w = value_of_node(s, x.id(), memo);
    // Winning move and maximal stalling coincide as "least element one step
    // down in value": w odd -> w-1 is the least even element value; w even
    // -> w-1 is the largest (odd) element value.
    for (Hf e : elems)
        if (memo.at(e.id()) == w - 1) return e;
    throw DomainError("unreachable: no element at value w-1");
}

}  // namespace setgame
