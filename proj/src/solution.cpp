#include "tep/solution.hpp"

#include <algorithm>

namespace tep {

namespace {

std::vector<int> consecutive_exponents(int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    std::vector<int> out(static_cast<std::size_t>(degree));
    for (int j = 1; j <= degree; ++j) out[static_cast<std::size_t>(j - 1)] = j;
    return out;
}

}  // namespace

TepSolution::TepSolution(int degree, std::vector<BigInt> xs, std::vector<BigInt> ys)
    : TepSolution(consecutive_exponents(degree), std::move(xs), std::move(ys)) {}

TepSolution::TepSolution(std::vector<int> exponents, std::vector<BigInt> xs,
                         std::vector<BigInt> ys)
    : exponents_(std::move(exponents)), xs_(std::move(xs)), ys_(std::move(ys)) {
    if (exponents_.empty()) throw std::invalid_argument("exponent set must be nonempty");
    if (!std::is_sorted(exponents_.begin(), exponents_.end()) ||
        std::adjacent_find(exponents_.begin(), exponents_.end()) != exponents_.end() ||
        exponents_.front() < 1)
        throw std::invalid_argument("exponents must be distinct, ascending and positive");
    if (xs_.empty() || xs_.size() != ys_.size())
        throw std::invalid_argument("the two sides must have the same nonzero size");
}

bool TepSolution::consecutive() const {
    return exponents_.back() == static_cast<int>(exponents_.size());
}

bool TepSolution::ideal() const {
    return consecutive() && xs_.size() == static_cast<std::size_t>(degree()) + 1;
}

bool solution_less(const TepSolution& lhs, const TepSolution& rhs) {
    if (lhs.exponents() != rhs.exponents()) return lhs.exponents() < rhs.exponents();
    if (lhs.xs() != rhs.xs()) return lhs.xs() < rhs.xs();
    return lhs.ys() < rhs.ys();
}

BigInt power_sum(const std::vector<BigInt>& values, int exponent) {
    if (exponent < 1) throw std::invalid_argument("power_sum: exponent must be >= 1");
    BigInt total = 0;
    for (const BigInt& v : values) total += pow_ui(v, static_cast<unsigned long>(exponent));
    return total;
}

SigmaReport verify(const TepSolution& sol) {
    SigmaReport report;
    report.exponents = sol.exponents();
    report.valid = true;
    for (int j : sol.exponents()) {
        report.sums_x.push_back(power_sum(sol.xs(), j));
        report.sums_y.push_back(power_sum(sol.ys(), j));
        if (report.sums_x.back() != report.sums_y.back()) report.valid = false;
    }
    std::vector<BigInt> mx = sol.xs(), my = sol.ys();
    std::sort(mx.begin(), mx.end());
    std::sort(my.begin(), my.end());
    report.trivial = (mx == my);
    return report;
}

TepSolution affine_map(const TepSolution& sol, const BigRat& m, const BigRat& k) {
    if (sgn(m) == 0) throw std::invalid_argument("affine_map: M must be nonzero");
    auto map_side = [&](const std::vector<BigInt>& side) {
        std::vector<BigInt> out;
        out.reserve(side.size());
        for (const BigInt& v : side) {
            BigRat image = m * BigRat(v) + k;
            if (image.get_den() != 1) throw NonIntegerResultError(image);
            out.emplace_back(image.get_num());
        }
        return out;
    };
    std::vector<BigInt> xs = map_side(sol.xs());  // x side reported first on error
    std::vector<BigInt> ys = map_side(sol.ys());
    return TepSolution(sol.exponents(), std::move(xs), std::move(ys));
}

TepSolution normalize(const TepSolution& sol) {
    BigInt g = 0;
    for (const BigInt& v : sol.xs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (const BigInt& v : sol.ys()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (sgn(g) == 0)
        throw std::invalid_argument("normalize: the all-zero solution has no canonical form");
    // Two candidates (one per global sign), each with sides sorted ascending
    // and the lexicographically smaller side first. The lex-greater candidate
    // wins; when the candidates differ this puts a positive entry at the first
    // position where sign matters, and negation-symmetric solutions (where
    // the candidates coincide) still get a canonical form.
    std::vector<std::pair<std::vector<BigInt>, std::vector<BigInt>>> candidates;
    for (int sign : {1, -1}) {
        std::vector<BigInt> a, b;
        a.reserve(sol.size());
        b.reserve(sol.size());
        for (const BigInt& v : sol.xs()) a.push_back(sign * v / g);
        for (const BigInt& v : sol.ys()) b.push_back(sign * v / g);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (b < a) std::swap(a, b);
        candidates.emplace_back(std::move(a), std::move(b));
    }
    auto& best = candidates[0] < candidates[1] ? candidates[1] : candidates[0];
    return TepSolution(sol.exponents(), std::move(best.first), std::move(best.second));
}

bool is_scalar_multiple(const TepSolution& lhs, const TepSolution& rhs) {
    if (lhs.size() != rhs.size() || lhs.exponents() != rhs.exponents())
        throw std::invalid_argument("is_scalar_multiple: size or exponent mismatch");
    return normalize(lhs) == normalize(rhs);
}

}  // namespace tep
