#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tep/bigint.hpp"

namespace tep {

/// Thrown by affine_map() when a mapped entry is not an integer.
struct NonIntegerResultError : std::domain_error {
    explicit NonIntegerResultError(BigRat bad)
        : std::domain_error("affine map produced non-integer value " + bad.get_str()),
          value(std::move(bad)) {}
    BigRat value;
};

/// A candidate equal-power-sum solution: two integer tuples of the same size
/// and the exponent set they are claimed to satisfy. The common case is the
/// consecutive set 1..k; the j=1,2,4 triple system is the one non-consecutive
/// exponent set in scope.
class TepSolution {
public:
    TepSolution(int degree, std::vector<BigInt> xs, std::vector<BigInt> ys);
    TepSolution(std::vector<int> exponents, std::vector<BigInt> xs, std::vector<BigInt> ys);

    int degree() const { return exponents_.back(); }
    const std::vector<int>& exponents() const { return exponents_; }
    bool consecutive() const;
    /// Ideal: n = k+1, the minimum size a nontrivial degree-k solution can have.
    bool ideal() const;
    std::size_t size() const { return xs_.size(); }
    const std::vector<BigInt>& xs() const { return xs_; }
    const std::vector<BigInt>& ys() const { return ys_; }

    friend bool operator==(const TepSolution& lhs, const TepSolution& rhs) {
        return lhs.exponents_ == rhs.exponents_ && lhs.xs_ == rhs.xs_ && lhs.ys_ == rhs.ys_;
    }
    friend bool operator!=(const TepSolution& lhs, const TepSolution& rhs) {
        return !(lhs == rhs);
    }

private:
    std::vector<int> exponents_;
    std::vector<BigInt> xs_, ys_;
};

/// Deterministic total order (exponents, then xs, then ys lexicographically);
/// used for dedup sets and stable output.
bool solution_less(const TepSolution& lhs, const TepSolution& rhs);

struct SigmaReport {
    std::vector<int> exponents;
    std::vector<BigInt> sums_x, sums_y;  // aligned with exponents
    bool valid = false;                  // every listed power sum agrees
    bool trivial = false;                // the two sides are equal as multisets
};

/// Sum of j-th powers; j must be >= 1. The empty sum is 0.
BigInt power_sum(const std::vector<BigInt>& values, int exponent);

/// Checks every claimed power-sum equality; never throws on bad candidates.
SigmaReport verify(const TepSolution& sol);

/// Maps every entry through v -> M*v + K with exact rational arithmetic.
/// M must be nonzero and every image must land on an integer (the interim
/// degree-3 construction needs M=1/2 with a half-integral K).
TepSolution affine_map(const TepSolution& sol, const BigRat& m, const BigRat& k);

/// Canonical representative of the orbit under per-side permutation, side
/// swap, integer scaling and global negation: entries divided by the gcd of
/// all of them, sides sorted ascending, lexicographically smaller side first,
/// global sign chosen to make the result lexicographically greatest (for
/// solutions that are not negation-symmetric this is exactly "leading
/// nonzero entry positive"). Idempotent. The all-zero solution has no
/// canonical form and is rejected.
TepSolution normalize(const TepSolution& sol);

/// True iff the two solutions have the same canonical form. Sizes and
/// exponent sets must match.
bool is_scalar_multiple(const TepSolution& lhs, const TepSolution& rhs);

}  // namespace tep
