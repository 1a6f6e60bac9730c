#pragma once

#include <json.hpp>

#include "tep/completeness.hpp"
#include "tep/generators.hpp"
#include "tep/solution.hpp"

namespace tep {

// Machine-readable records. All integers are serialized as decimal strings
// so values never pass through 64-bit intermediates.

/// {"k", "x", "y", "sigma", "valid", "trivial"}; non-consecutive exponent
/// sets add a "j" array, with "sigma" aligned to it.
nlohmann::json solution_record(const TepSolution& sol);

nlohmann::json triad_record(const TriadPair& pair);

nlohmann::json triad_search_record(const EqualSumProductTriads& pair);

nlohmann::json coverage_record(const CoverageReport& report);

}  // namespace tep
