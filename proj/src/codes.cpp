#include "setgame/codes.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

namespace setgame {

namespace {

constexpr mp_bitcnt_t kNoBit = ~static_cast<mp_bitcnt_t>(0);

void require_nonnegative(const SetCode& c) {
    if (sgn(c) < 0) throw DomainError("set codes are nonnegative");
}

// Element codes of a code that is itself a bit position (< kMaxCodeBits, so
// it fits an unsigned long); ascending.
std::vector<unsigned long> position_bits(unsigned long p) {
    std::vector<unsigned long> out;
    for (unsigned long q = p; q; q &= q - 1)
        out.push_back(static_cast<unsigned long>(std::countr_zero(q)));
    return out;
}

unsigned rank_of_position(unsigned long p, std::unordered_map<unsigned long, unsigned>& memo) {
    if (p == 0) return 0;
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    unsigned deepest = 0;
    for (unsigned long b : position_bits(p))
        deepest = std::max(deepest, rank_of_position(b, memo));
    unsigned r = deepest + 1;
    memo.emplace(p, r);
    return r;
}

const std::string& braces_of_position(unsigned long p,
                                      std::unordered_map<unsigned long, std::string>& memo) {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    std::string s = "{";
    bool first = true;
    for (unsigned long b : position_bits(p)) {
        if (!first) s += ',';
        s += braces_of_position(b, memo);
        first = false;
    }
    s += '}';
    return memo.emplace(p, std::move(s)).first->second;
}

}  // namespace

std::vector<SetCode> elements(const SetCode& c) {
    require_nonnegative(c);
    std::vector<SetCode> out;
    for (mp_bitcnt_t i = mpz_scan1(c.get_mpz_t(), 0); i != kNoBit;
         i = mpz_scan1(c.get_mpz_t(), i + 1))
        out.emplace_back(static_cast<unsigned long>(i));
    return out;
}

SetCode encode(const std::vector<SetCode>& elems) {
    Nat code = 0;
    for (const auto& e : elems) {
        require_nonnegative(e);
        if (!e.fits_ulong_p() || e.get_ui() >= kMaxCodeBits)
            throw DomainError("encode: element code exceeds the representable bit range (" +
                              std::to_string(kMaxCodeBits) + " bits)");
        mpz_setbit(code.get_mpz_t(), e.get_ui());
    }
    return code;
}

unsigned rank(const SetCode& c) {
    require_nonnegative(c);
    if (c == 0) return 0;
    std::unordered_map<unsigned long, unsigned> memo;
    unsigned deepest = 0;
    for (mp_bitcnt_t i = mpz_scan1(c.get_mpz_t(), 0); i != kNoBit;
         i = mpz_scan1(c.get_mpz_t(), i + 1))
        deepest = std::max(deepest, rank_of_position(static_cast<unsigned long>(i), memo));
    return deepest + 1;
}

Nat level_size(unsigned m, unsigned cap) {
    if (m > cap)
        throw DomainError("level size |V_" + std::to_string(m) +
                          "| is beyond the counting cap (" + std::to_string(cap) + ")");
    Nat size = 0;  // |V_0|
    for (unsigned i = 0; i < m; ++i) {
        if (!size.fits_ulong_p() || size.get_ui() > kMaxCodeBits)
            throw DomainError("level size |V_" + std::to_string(m) + "| is not representable");
        size = pow2(size.get_ui());
    }
    return size;
}

std::vector<SetCode> tc(const SetCode& c) {
    require_nonnegative(c);
    std::set<Nat> seen;
    std::vector<Nat> stack = elements(c);
    while (!stack.empty()) {
        Nat x = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(x).second) continue;
        for (auto& e : elements(x)) stack.push_back(std::move(e));
    }
    return {seen.begin(), seen.end()};
}

std::string to_braces(const SetCode& c) {
    require_nonnegative(c);
    std::unordered_map<unsigned long, std::string> memo;
    std::string s = "{";
    bool first = true;
    for (mp_bitcnt_t i = mpz_scan1(c.get_mpz_t(), 0); i != kNoBit;
         i = mpz_scan1(c.get_mpz_t(), i + 1)) {
        if (!first) s += ',';
        s += braces_of_position(static_cast<unsigned long>(i), memo);
        first = false;
    }
    s += '}';
    return s;
}

}  // namespace setgame
