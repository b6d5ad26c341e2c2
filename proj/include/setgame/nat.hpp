#pragma once

#include <gmpxx.h>

namespace setgame {

using Nat = mpz_class;  // arbitrary-precision integer, nonnegative by convention
using Rat = mpq_class;  // exact rational, kept canonical

inline Nat pow2(unsigned long e) {
    Nat r;
    mpz_setbit(r.get_mpz_t(), e);
    return r;
}

}  // namespace setgame
