#include "setgame/hf.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace setgame {

bool Hf::empty() const { return id_ == 0; }

std::size_t Hf::size() const { return store_->elements_of(id_).size(); }

std::vector<Hf> Hf::elements() const {
    auto span = store_->elements_of(id_);
    std::vector<Hf> out;
    out.reserve(span.size());
    for (auto id : span) out.emplace_back(store_, id);
    return out;
}

HfStore::HfStore() { intern({}); }

std::span<const std::uint32_t> HfStore::elements_of(std::uint32_t id) const {
    return nodes_[id];
}

std::uint32_t HfStore::intern(std::vector<std::uint32_t> elems) {
    if (auto it = index_.find(elems); it != index_.end()) return it->second;
    unsigned rank = 0;
    for (auto e : elems) rank = std::max(rank, ranks_[e] + 1);
    auto id = static_cast<std::uint32_t>(nodes_.size());
    index_.emplace(elems, id);
    nodes_.push_back(std::move(elems));
    ranks_.push_back(rank);
    return id;
}

Hf HfStore::make(const std::vector<Hf>& elems) {
    std::vector<std::uint32_t> ids;
    ids.reserve(elems.size());
    for (Hf e : elems) {
        if (&e.store() != this) throw DomainError("element belongs to a different store");
        ids.push_back(e.id());
    }
    std::sort(ids.begin(), ids.end(),
              [this](std::uint32_t a, std::uint32_t b) { return compare_codes(a, b) < 0; });
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return Hf(this, intern(std::move(ids)));
}

// Codes compare like the sets of their bit positions read high-to-low: the
// set holding the largest element of the symmetric difference is larger.
// Interning guarantees distinct ids never compare equal.
int HfStore::compare_codes(std::uint32_t a, std::uint32_t b) const {
    if (a == b) return 0;
    std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
    std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
    int lo_vs_hi;
    if (auto it = cmp_cache_.find(key); it != cmp_cache_.end()) {
        lo_vs_hi = it->second;
    } else {
        const auto& x = nodes_[lo];
        const auto& y = nodes_[hi];
        lo_vs_hi = 0;
        auto xi = x.rbegin();
        auto yi = y.rbegin();
        for (; xi != x.rend() && yi != y.rend(); ++xi, ++yi) {
            int c = compare_codes(*xi, *yi);
            if (c != 0) {
                lo_vs_hi = c;
                break;
            }
        }
        if (lo_vs_hi == 0) {
            assert(x.size() != y.size());
            lo_vs_hi = x.size() < y.size() ? -1 : 1;
        }
        cmp_cache_.emplace(key, lo_vs_hi);
    }
    return a == lo ? lo_vs_hi : -lo_vs_hi;
}

bool code_less(Hf a, Hf b) {
    if (&a.store() != &b.store()) throw DomainError("handles belong to different stores");
    return a.store().compare_codes(a.id(), b.id()) < 0;
}

unsigned rank(Hf x) { return x.store().rank_of(x.id()); }

std::vector<Hf> tc(Hf x) {
    const HfStore& s = x.store();
    std::vector<char> seen(s.size(), 0);
    std::vector<std::uint32_t> stack(1, x.id());
    std::vector<std::uint32_t> found;
    while (!stack.empty()) {
        auto id = stack.back();
        stack.pop_back();
        for (auto e : s.elements_of(id)) {
            if (seen[e]) continue;
            seen[e] = 1;
            found.push_back(e);
            stack.push_back(e);
        }
    }
    std::sort(found.begin(), found.end(),
              [&s](std::uint32_t a, std::uint32_t b) { return s.compare_codes(a, b) < 0; });
    std::vector<Hf> out;
    out.reserve(found.size());
    for (auto id : found) out.emplace_back(&s, id);
    return out;
}

namespace {

constexpr std::size_t kMaxParseDepth = 1 << 14;

struct BraceParser {
    std::string_view text;
    std::size_t pos = 0;
    HfStore& store;

    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    Hf parse_set(std::size_t depth) {
        if (depth > kMaxParseDepth) fail("nesting too deep");
        skip_ws();
        if (pos >= text.size() || text[pos] != '{') fail("expected '{'");
        ++pos;
        skip_ws();
        std::vector<Hf> elems;
        if (pos < text.size() && text[pos] == '}') {
            ++pos;
            return store.empty();
        }
        while (true) {
            elems.push_back(parse_set(depth + 1));
            skip_ws();
            if (pos >= text.size()) fail("unterminated set: expected ',' or '}'");
            char c = text[pos];
            ++pos;
            if (c == '}') break;
            if (c != ',') {
                --pos;
                fail("expected ',' or '}'");
            }
        }
        return store.make(elems);
    }
};

const std::string& braces_of(const HfStore& s, std::uint32_t id,
                             std::unordered_map<std::uint32_t, std::string>& memo) {
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    std::string out = "{";
    bool first = true;
    for (auto e : s.elements_of(id)) {
        if (!first) out += ',';
        out += braces_of(s, e, memo);
        first = false;
    }
    out += '}';
    return memo.emplace(id, std::move(out)).first->second;
}

}  // namespace

Hf parse_braces(HfStore& store, std::string_view text) {
    BraceParser p{text, 0, store};
    Hf result = p.parse_set(0);
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters after set");
    return result;
}

std::string to_braces(Hf x) {
    std::unordered_map<std::uint32_t, std::string> memo;
    return braces_of(x.store(), x.id(), memo);
}

Hf from_code(HfStore& store, const SetCode& c) {
    // Bit positions ascend in code order, so children arrive presorted and
    // can be interned directly.
    std::unordered_map<unsigned long, std::uint32_t> memo;
    auto bits_of = [](unsigned long p) {
        std::vector<unsigned long> out;
        for (unsigned long q = p; q; q &= q - 1)
            out.push_back(static_cast<unsigned long>(std::countr_zero(q)));
        return out;
    };
    auto resolve = [&](unsigned long root) -> std::uint32_t {
        std::vector<std::pair<unsigned long, bool>> stack{{root, false}};
        while (!stack.empty()) {
            auto [p, expanded] = stack.back();
            stack.pop_back();
            if (memo.count(p)) continue;
            if (!expanded) {
                stack.push_back({p, true});
                for (unsigned long b : bits_of(p))
                    if (!memo.count(b)) stack.push_back({b, false});
                continue;
            }
            std::vector<std::uint32_t> ids;
            for (unsigned long b : bits_of(p)) ids.push_back(memo.at(b));
            memo.emplace(p, store.intern(std::move(ids)));
        }
        return memo.at(root);
    };
    std::vector<std::uint32_t> ids;
    for (const auto& e : elements(c)) {
        if (!e.fits_ulong_p() || e.get_ui() >= kMaxCodeBits)
            throw DomainError("from_code: element code exceeds the representable bit range");
        ids.push_back(resolve(e.get_ui()));
    }
    return Hf(&store, store.intern(std::move(ids)));
}

SetCode to_code(Hf x) {
    const HfStore& s = x.store();
    std::unordered_map<std::uint32_t, Nat> memo;

    // Post-order over the transitive closure, iterative to be safe on deep
    // towers.
    std::vector<std::pair<std::uint32_t, bool>> stack{{x.id(), false}};
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
        Nat code = 0;
        for (auto e : s.elements_of(id)) {
            const Nat& ec = memo.at(e);
            if (!ec.fits_ulong_p() || ec.get_ui() >= kMaxCodeBits)
                throw DomainError(
                    "to_code: code exceeds the representable bit range (set too deep)");
            mpz_setbit(code.get_mpz_t(), ec.get_ui());
        }
        memo.emplace(id, std::move(code));
    }
    return memo.at(x.id());
}

}  // namespace setgame
