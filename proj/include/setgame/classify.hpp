#pragma once

// Winning classification for the membership game on well-founded sets: the
// players alternate picking an element of the last pick, and whoever picks
// the empty set wins. Every well-founded position is determined with a
// finite ordinal value w:
//
//   w(x) odd  -> the player to move wins (WIN_I), by moving to an element
//                with even value w(x) - 1 (the least even value among
//                elements);
//   w(x) even -> the opponent wins (WIN_II); every element has odd value
//                and w(x) = 1 + the largest element value (w({}) = 0).

#include <cstdint>
#include <string>
#include <vector>

#include "setgame/hf.hpp"

namespace setgame {

enum class Winner : std::uint8_t { I, II };

struct Classification {
    Winner winner;  // I exactly when w is odd
    unsigned w;
};

inline bool operator==(const Classification& a, const Classification& b) {
    return a.winner == b.winner && a.w == b.w;
}

std::string to_string(const Classification& c);  // "winner=I w=1"

Classification classify(Hf x);
Classification classify(const SetCode& c);

// Classification of every code in [0, |V_m|), index = code. Computed by
// dynamic programming over the level table; chunk-parallel above the V_4
// prefix with bit-identical results for any thread count.
// Throws DomainError for m > cap.
std::vector<Classification> classify_level(unsigned m, unsigned cap = kEnumRankCap);

inline constexpr unsigned kWitnessBound = 16;

// The canonical value-n witness z_n: z_0 = {}, z_{2k+1} = {z_2k},
// z_{2k+2} = {z_1, z_3, ..., z_{2k+1}}. classify(witness(n)).w == n.
// Throws DomainError for n > bound.
Hf witness(HfStore& store, unsigned n, unsigned bound = kWitnessBound);

// The optimal reply from x: the code-least element of value w(x) - 1.
// For WIN_I positions that is a winning move; for WIN_II positions it is
// maximal stalling. Throws DomainError when x is empty (mover already lost).
Hf optimal_move(Hf x);

}  // namespace setgame
