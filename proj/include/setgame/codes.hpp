#pragma once

// Ackermann coding of hereditarily finite sets: bit i of a code is 1 exactly
// when the set coded by i is an element. The coding is a bijection between
// naturals and HF sets, and it nests the cumulative levels as initial
// segments: the sets of rank <= m are exactly the codes in [0, |V_m|).

#include <string>
#include <vector>

#include "setgame/errors.hpp"
#include "setgame/nat.hpp"

namespace setgame {

using SetCode = Nat;

// Hard bound on the bit length of any materialized code. A code needs one bit
// per potential element; rank-6 sets need up to 2^16 bits, ranks beyond that
// are astronomically out of reach, so 4 Mbit leaves generous headroom while
// keeping accidental blowups impossible.
inline constexpr unsigned long kMaxCodeBits = 1ul << 22;

// Feasibility caps: enumeration walks every code of a level (|V_5| = 65536,
// |V_6| = 2^65536), counting only needs level sizes as bignums.
inline constexpr unsigned kEnumRankCap = 5;
inline constexpr unsigned kCountRankCap = 6;

// Element codes of c, ascending (= ascending code order of the elements).
std::vector<SetCode> elements(const SetCode& c);

// Code of the set whose elements are coded by `elems`; duplicates collapse.
// Throws DomainError if an element code is >= kMaxCodeBits.
SetCode encode(const std::vector<SetCode>& elems);

// Von Neumann rank: 0 for the empty set, else 1 + max over element ranks.
unsigned rank(const SetCode& c);

// |V_m|. Throws DomainError for m > cap (and for any m whose size cannot be
// materialized at all).
Nat level_size(unsigned m, unsigned cap = kCountRankCap);

// Transitive closure of the set coded by c (the code itself excluded),
// ascending.
std::vector<SetCode> tc(const SetCode& c);

// Canonical brace notation; elements ascending in code order, no whitespace.
std::string to_braces(const SetCode& c);

}  // namespace setgame
