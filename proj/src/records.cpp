#include "tep/records.hpp"

namespace tep {

namespace {

nlohmann::json string_array(const std::vector<BigInt>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const BigInt& v : values) out.push_back(v.get_str());
    return out;
}

template <std::size_t N>
nlohmann::json string_array(const std::array<BigInt, N>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const BigInt& v : values) out.push_back(v.get_str());
    return out;
}

}  // namespace

nlohmann::json solution_record(const TepSolution& sol) {
    SigmaReport report = verify(sol);
    nlohmann::json out;
    out["k"] = sol.degree();
    if (!sol.consecutive()) out["j"] = sol.exponents();
    out["x"] = string_array(sol.xs());
    out["y"] = string_array(sol.ys());
    out["sigma"] = string_array(report.sums_x);
    out["valid"] = report.valid;
    out["trivial"] = report.trivial;
    return out;
}

nlohmann::json triad_record(const TriadPair& pair) {
    nlohmann::json out;
    out["X"] = string_array(pair.X);
    out["Y"] = string_array(pair.Y);
    out["sum_of_squares"] =
        BigInt(pair.X[0] * pair.X[0] + pair.X[1] * pair.X[1] + pair.X[2] * pair.X[2]).get_str();
    out["product"] = BigInt(pair.X[0] * pair.X[1] * pair.X[2]).get_str();
    return out;
}

nlohmann::json triad_search_record(const EqualSumProductTriads& pair) {
    nlohmann::json out;
    out["first"] = string_array(pair.first);
    out["second"] = string_array(pair.second);
    out["sum"] = BigInt(pair.first[0] + pair.first[1] + pair.first[2]).get_str();
    out["product"] = BigInt(pair.first[0] * pair.first[1] * pair.first[2]).get_str();
    return out;
}

nlohmann::json coverage_record(const CoverageReport& report) {
    nlohmann::json out;
    out["height"] = report.height;
    out["found"] = report.found;
    out["covered"] = report.covered;
    out["coverage"] = report.coverage.get_str();
    out["vacuous"] = report.vacuous;
    nlohmann::json unmatched = nlohmann::json::array();
    for (const TepSolution& sol : report.unmatched) unmatched.push_back(solution_record(sol));
    out["unmatched"] = unmatched;
    return out;
}

}  // namespace tep
