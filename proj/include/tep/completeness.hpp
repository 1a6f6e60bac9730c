#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tep/generators.hpp"
#include "tep/solution.hpp"

namespace tep {

/// Inversion of the five-parameter degree-2 form. The parameters enter the
/// solution only through C and the four pairwise products, so those are what
/// recovery can observe; consistent means the product identity AD*BG = AG*BD
/// holds and the reconstruction reproduces all six entries.
struct RecoveredDickson {
    BigInt C, AD, AG, BD, BG;
    bool consistent = false;
};

/// Recovery assuming the entries are already in the published arrangement.
/// Requires a valid k=2, n=3 solution.
RecoveredDickson recover_dickson_arranged(const TepSolution& sol);

/// Tries all 72 index/side arrangements and returns the first consistent
/// recovery; nullopt would falsify the completeness of the five-parameter
/// form at this instance. Requires a valid k=2, n=3 solution.
std::optional<RecoveredDickson> recover_dickson(const TepSolution& sol);

/// Numeric check that the six-parameter family reproduces (D+G) times the
/// five-parameter solution under the published parameter map.
bool verify_dickson_equivalence(const DicksonParams& params);

/// The same equivalence as a polynomial identity over all five parameters.
bool dickson_equivalence_symbolic();

/// True iff some rational six-parameter instance generates a scalar multiple
/// of sol. Requires a valid, nontrivial k=2, n=3 solution.
bool theorem1_represents(const TepSolution& sol);

struct CoverageReport {
    int height = 0;
    long long found = 0;
    long long covered = 0;
    bool vacuous = false;  // found == 0; coverage reported as 1
    BigRat coverage;
    std::vector<TepSolution> unmatched;
};

/// All canonical nontrivial degree-2 ideal solutions with both sides inside
/// [0, height], deduplicated by canonical form, deterministically ordered.
std::vector<TepSolution> enumerate_ideal_deg2(int height, int jobs = 1);

/// Fraction of enumerate_ideal_deg2(height) represented by the six-parameter
/// family; exactly 1 unless completeness fails, in which case the
/// counterexamples are reported.
CoverageReport coverage_deg2(int height, int jobs = 1);

/// All canonical nontrivial degree-3 ideal solutions with both sides inside
/// [0, height].
std::vector<TepSolution> enumerate_ideal_deg3(int height, int jobs = 1);

/// Canonical forms of every nontrivial degree-3 family instance with all
/// four parameters in [-param_bound, param_bound]; sorted, deduplicated.
std::vector<TepSolution> deg3_family_canonical(int param_bound);

/// Fraction of enumerate_ideal_deg3(height) matched, up to scalar multiple,
/// by the degree-3 family over the given parameter box. No completeness is
/// claimed, so no target value; the report is observational.
CoverageReport coverage_deg3(int height, int param_bound, int jobs = 1);

/// Two triples of positive integers with the same sum and the same product.
struct EqualSumProductTriads {
    std::array<BigInt, 3> first, second;
};

/// All pairs of distinct multisets inside [1, height] with equal sums and
/// equal products, deterministically ordered.
std::vector<EqualSumProductTriads> search_triads(int height);

}  // namespace tep
