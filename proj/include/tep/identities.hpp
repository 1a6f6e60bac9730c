#pragma once

#include <array>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tep/multipoly.hpp"

namespace tep {

/// Outcome of a symbolic proof: power-sum residuals, named polynomial
/// difference checks, and named symmetry claims. pass is true iff every
/// residual and difference is the zero polynomial and every symmetry claim
/// holds. Residual polynomials are stored so failures are diagnosable.
struct IdentityReport {
    std::string name;
    std::vector<std::pair<int, MultiPoly>> residuals;
    std::vector<std::pair<std::string, MultiPoly>> sigma_checks;
    std::vector<std::pair<std::string, bool>> symmetry_checks;
    bool pass = false;

    void finalize();
};

using Phi6 = std::function<MultiPoly(const MultiPoly&, const MultiPoly&, const MultiPoly&,
                                     const MultiPoly&, const MultiPoly&, const MultiPoly&)>;
using Phi4 = std::function<MultiPoly(const MultiPoly&, const MultiPoly&, const MultiPoly&,
                                     const MultiPoly&)>;

MultiPoly power_sum_poly(std::span<const MultiPoly> values, int exponent);
MultiPoly power_sum_residual(std::span<const MultiPoly> xs, std::span<const MultiPoly> ys,
                             int exponent);

// Full expansion to canonical sparse form is the proof mechanism throughout:
// a claimed identity holds iff the expanded difference is the empty map.

/// Degree-2 family: j=1,2 residuals, both common-sum formulas, and their
/// symmetry in {p,q,r} and {a,b,c}. The form is pluggable so single-sign
/// mutations can be run as negative controls.
IdentityReport theorem1_report(const Phi6& phi);
IdentityReport prove_theorem1();

/// Equal-squares/equal-products triads: both residuals, plus re-derivation
/// with free coefficients f,g,h — the product identity holds for all f,g,h,
/// the squares residual equals a three-bracket combination, and the
/// published parameter choices annihilate it.
IdentityReport prove_theorem2();

/// The free-coefficient triad construction used in the derivation re-check.
struct Theorem2General {
    std::array<MultiPoly, 6> entries;  // X1..X3, Y1..Y3 over f,g,h,p,q,r,s
    MultiPoly squares_residual;
    MultiPoly product_residual;
    MultiPoly bracket_combination;  // (pq+rs)^2(f^2-g^2) + ...
};
Theorem2General theorem2_general();

/// Images for f,g,h (plus identity maps for p,q,r,s); swap_fg swaps the f
/// and g images, the documented negative control.
std::map<std::string, MultiPoly> theorem2_coefficient_images(bool swap_fg);

/// Degree-3 family: j=1,2,3 residuals, the three common sums against their
/// elementary-symmetric forms (checked both by direct substitution and
/// through decompose_elementary), symmetry in {p,q,r,s}, and the entrywise
/// half-shift relation against the interim family (dropped shift = control).
IdentityReport theorem3_report(const Phi4& phi, bool include_shift);
IdentityReport prove_theorem3();

/// j=1,2,4 triple system: residuals, closed forms for sigma_2 and sigma_4,
/// the derived relation 2*sigma_4 = sigma_2^2, the parameter substitution
/// linking it to the degree-2 family, and symmetry claims.
IdentityReport theorem4_report(const Phi6& psi);

/// Degree-5 family: j=1..5 residuals, vanishing odd sums, doubled closed
/// forms for sigma_2 and sigma_4, and symmetry claims.
IdentityReport theorem5_report(const Phi6& psi);

IdentityReport prove_theorem4_5();

/// One report per theorem, in order; the CLI prints one line for each.
std::vector<IdentityReport> prove_all();

}  // namespace tep
