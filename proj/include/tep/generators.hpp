#pragma once

#include <array>

#include "tep/bigint.hpp"
#include "tep/solution.hpp"

namespace tep {

// Parameter records in the theorems' declaration order. Degenerate values
// are allowed everywhere; they produce trivial solutions, never errors.

struct Deg2Params {
    BigInt p, q, r, a, b, c;
};

struct DicksonParams {
    BigInt A, B, C, D, G;
};

struct QuadParams {
    BigInt p, q, r, s;
};

/// Two integer triples with equal sums of squares and equal products.
struct TriadPair {
    std::array<BigInt, 3> X, Y;
};

/// Degree-2 ideal solution (k=2, n=3) in six parameters; complete up to
/// scalar multiples.
TepSolution gen_deg2(const Deg2Params& params);

/// The classical five-parameter complete degree-2 solution (k=2, n=3).
TepSolution gen_dickson(const DicksonParams& params);

/// Parameter map sending the five-parameter form into the six-parameter
/// family; gen_deg2 of the result equals (D+G) times gen_dickson entrywise.
Deg2Params dickson_to_theorem1(const DicksonParams& params);

/// Equal sums of squares and equal products from four parameters.
TriadPair gen_triads(const QuadParams& params);

/// Degree-3 ideal solution (k=3, n=4) before the affine half-shift;
/// kept as a cross-check for gen_deg3.
TepSolution gen_deg3_interim(const QuadParams& params);

/// Degree-3 ideal solution (k=3, n=4) in four parameters, all three common
/// sums symmetric in them.
TepSolution gen_deg3(const QuadParams& params);

/// Twice the affine shift linking interim and final degree-3 solutions:
/// gen_deg3_interim = 2*gen_deg3 - deg3_shift_doubled entrywise.
BigInt deg3_shift_doubled(const QuadParams& params);

/// The j=1,2,4 triple system (n=3) in six parameters.
TepSolution gen_eqsums124(const Deg2Params& params);

/// Degree-5 ideal solution (k=5, n=6): the j=1,2,4 triple extended with its
/// negatives, so every odd power sum vanishes.
TepSolution gen_deg5(const Deg2Params& params);

}  // namespace tep
