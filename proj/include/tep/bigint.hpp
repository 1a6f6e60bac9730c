#pragma once

#include <gmpxx.h>

namespace tep {

// All arithmetic in this project is exact: arbitrary-precision integers
// everywhere, rationals only at the affine-map boundary.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt pow_ui(const BigInt& base, unsigned long exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

}  // namespace tep
