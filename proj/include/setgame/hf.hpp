#pragma once

// Hereditarily finite sets as handles into an interning store.
//
// A store keeps one immutable node per distinct set; a node is the list of
// its element ids sorted ascending in Ackermann code order. Interning makes
// equality an id comparison and shares common substructure, so sets whose
// codes overflow any integer width (deep singleton towers, the w-witness
// family) stay cheap as long as their transitive closures are small. Nodes
// are created elements-first, so membership is acyclic by construction.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "setgame/codes.hpp"

namespace setgame {

class HfStore;

// Value handle: a store pointer plus a node id. Handles from the same store
// compare equal exactly when they denote the same set.
class Hf {
public:
    Hf() : store_(nullptr), id_(0) {}
    Hf(const HfStore* store, std::uint32_t id) : store_(store), id_(id) {}

    std::uint32_t id() const { return id_; }
    const HfStore& store() const { return *store_; }
    bool empty() const;
    std::size_t size() const;
    std::vector<Hf> elements() const;  // ascending code order

    friend bool operator==(Hf a, Hf b) { return a.store_ == b.store_ && a.id_ == b.id_; }
    friend bool operator!=(Hf a, Hf b) { return !(a == b); }

private:
    const HfStore* store_;
    std::uint32_t id_;
};

// The node arena. Not synchronized: confine a store to one thread at a time
// or guard it externally; handles themselves are plain values.
class HfStore {
public:
    HfStore();  // node 0 is the empty set

    Hf empty() const { return Hf(this, 0); }
    Hf at(std::uint32_t id) const { return Hf(this, id); }
    std::size_t size() const { return nodes_.size(); }

    // The set with the given elements (this store's handles; duplicates
    // collapse).
    Hf make(const std::vector<Hf>& elems);
    Hf singleton(Hf e) { return make({e}); }

    std::span<const std::uint32_t> elements_of(std::uint32_t id) const;
    unsigned rank_of(std::uint32_t id) const { return ranks_[id]; }

    // Three-way comparison in Ackermann code order; 0 only for a == b.
    int compare_codes(std::uint32_t a, std::uint32_t b) const;

private:
    friend Hf from_code(HfStore&, const SetCode&);

    // elems must be distinct and ascending in code order.
    std::uint32_t intern(std::vector<std::uint32_t> elems);

    struct VecHash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
            std::size_t h = 0x9e3779b97f4a7c15ull ^ v.size();
            for (auto x : v) h = (h ^ x) * 0x100000001b3ull;
            return h;
        }
    };

    std::vector<std::vector<std::uint32_t>> nodes_;
    std::vector<unsigned> ranks_;
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> index_;
    mutable std::unordered_map<std::uint64_t, int> cmp_cache_;
};

// Strict order on same-store handles matching the numeric order of codes.
bool code_less(Hf a, Hf b);

unsigned rank(Hf x);

// Transitive closure of x (x itself excluded), ascending in code order.
std::vector<Hf> tc(Hf x);

// Brace notation parser. Grammar: set := '{' (set (',' set)*)? '}' with
// arbitrary whitespace between tokens; the full input must be one set.
// Duplicate elements collapse. Throws ParseError with the byte offset.
Hf parse_braces(HfStore& store, std::string_view text);

// Canonical brace notation; inverse of parse_braces up to normalization.
std::string to_braces(Hf x);

// Conversions to and from Ackermann codes. to_code throws DomainError when
// the code would exceed kMaxCodeBits (rank >= 7 territory).
Hf from_code(HfStore& store, const SetCode& c);
SetCode to_code(Hf x);

}  // namespace setgame
