#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tep/completeness.hpp"
#include "tep/generators.hpp"
#include "tep/identities.hpp"
#include "tep/records.hpp"
#include "tep/solution.hpp"

namespace {

using tep::BigInt;

std::vector<BigInt> parse_int_list(const std::string& text) {
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw std::invalid_argument("empty entry in integer list '" + text + "'");
        out.emplace_back(item.substr(first, last - first + 1));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::vector<BigInt> parse_params(const std::string& text, std::size_t expected,
                                 const std::string& family) {
    std::vector<BigInt> params = parse_int_list(text);
    if (params.size() != expected)
        throw std::invalid_argument("family '" + family + "' takes " + std::to_string(expected) +
                                    " parameters, got " + std::to_string(params.size()));
    return params;
}

// Output goes to stdout unless --out was given; JSON records one per line.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string join(const std::vector<BigInt>& values, const char* sep = " ") {
    std::string out;
    for (const BigInt& v : values) {
        if (!out.empty()) out += sep;
        out += v.get_str();
    }
    return out;
}

void print_solution(std::ostream& os, const tep::TepSolution& sol, const std::string& format) {
    if (format == "json") {
        os << tep::solution_record(sol).dump() << "\n";
        return;
    }
    tep::SigmaReport report = tep::verify(sol);
    if (format == "csv") {
        os << sol.degree() << ",\"" << join(sol.xs()) << "\",\"" << join(sol.ys()) << "\",\""
           << join(report.sums_x) << "\"," << (report.valid ? "true" : "false") << ","
           << (report.trivial ? "true" : "false") << "\n";
        return;
    }
    os << "k=" << sol.degree() << " n=" << sol.size() << (sol.ideal() ? " ideal" : "")
       << (report.valid ? " valid" : " INVALID") << (report.trivial ? " trivial" : "") << "\n";
    os << "  x: " << join(sol.xs()) << "\n";
    os << "  y: " << join(sol.ys()) << "\n";
    for (std::size_t i = 0; i < report.exponents.size(); ++i) {
        os << "  sigma_" << report.exponents[i] << " = " << report.sums_x[i].get_str();
        if (report.sums_x[i] != report.sums_y[i])
            os << " != " << report.sums_y[i].get_str() << " (y-side)";
        os << "\n";
    }
}

int run_generate(const std::string& family, const std::string& params_text,
                 const std::string& format, const std::string& out_path) {
    Sink sink(out_path);
    std::ostream& os = sink.stream();
    if (family == "deg2" || family == "deg124" || family == "deg5") {
        auto v = parse_params(params_text, 6, family);
        tep::Deg2Params params{v[0], v[1], v[2], v[3], v[4], v[5]};
        tep::TepSolution sol = family == "deg2"    ? tep::gen_deg2(params)
                               : family == "deg124" ? tep::gen_eqsums124(params)
                                                    : tep::gen_deg5(params);
        print_solution(os, sol, format);
    } else if (family == "dickson") {
        auto v = parse_params(params_text, 5, family);
        print_solution(os, tep::gen_dickson({v[0], v[1], v[2], v[3], v[4]}), format);
    } else if (family == "deg3") {
        auto v = parse_params(params_text, 4, family);
        print_solution(os, tep::gen_deg3({v[0], v[1], v[2], v[3]}), format);
    } else {  // triads
        auto v = parse_params(params_text, 4, family);
        tep::TriadPair pair = tep::gen_triads({v[0], v[1], v[2], v[3]});
        if (format == "pretty") {
            os << "X: " << pair.X[0].get_str() << " " << pair.X[1].get_str() << " "
               << pair.X[2].get_str() << "\n";
            os << "Y: " << pair.Y[0].get_str() << " " << pair.Y[1].get_str() << " "
               << pair.Y[2].get_str() << "\n";
        } else {
            os << tep::triad_record(pair).dump() << "\n";
        }
    }
    return 0;
}

int run_verify(int k, const std::string& xs_text, const std::string& ys_text,
               const std::string& format, const std::string& out_path) {
    Sink sink(out_path);
    tep::TepSolution sol(k, parse_int_list(xs_text), parse_int_list(ys_text));
    print_solution(sink.stream(), sol, format);
    return tep::verify(sol).valid ? 0 : 2;
}

int run_identities(bool emit_residuals) {
    bool all_pass = true;
    for (const tep::IdentityReport& report : tep::prove_all()) {
        std::cout << (report.pass ? "PASS" : "FAIL") << "  " << report.name << "  (residuals:";
        for (const auto& [j, poly] : report.residuals)
            std::cout << " j=" << j << (poly.is_zero() ? "" : "*NONZERO*");
        std::cout << "; " << report.sigma_checks.size() << " sum checks, "
                  << report.symmetry_checks.size() << " symmetry checks)\n";
        if (emit_residuals) {
            for (const auto& [j, poly] : report.residuals)
                std::cout << "    residual j=" << j << ": " << poly.str() << "\n";
            for (const auto& [label, poly] : report.sigma_checks)
                std::cout << "    " << label << ": " << poly.str() << "\n";
            for (const auto& [label, ok] : report.symmetry_checks)
                std::cout << "    " << label << ": " << (ok ? "yes" : "NO") << "\n";
        }
        all_pass = all_pass && report.pass;
    }
    return all_pass ? 0 : 2;
}

int run_search(const std::string& what, int height, int jobs, const std::string& format,
               const std::string& out_path) {
    Sink sink(out_path);
    std::ostream& os = sink.stream();
    if (what == "triads") {
        for (const auto& pair : tep::search_triads(height))
            os << tep::triad_search_record(pair).dump() << "\n";
        return 0;
    }
    std::vector<tep::TepSolution> sols = what == "deg2"
                                             ? tep::enumerate_ideal_deg2(height, jobs)
                                             : tep::enumerate_ideal_deg3(height, jobs);
    for (const tep::TepSolution& sol : sols) print_solution(os, sol, format);
    return 0;
}

int run_coverage(const std::string& what, int height, int param_bound, int jobs,
                 const std::string& out_path) {
    Sink sink(out_path);
    tep::CoverageReport report = what == "deg2" ? tep::coverage_deg2(height, jobs)
                                                : tep::coverage_deg3(height, param_bound, jobs);
    sink.stream() << tep::coverage_record(report).dump() << "\n";
    if (what == "deg2" && report.coverage != tep::BigRat(1)) return 2;
    return 0;
}

int run_dickson_map(const std::string& params_text, const std::string& out_path) {
    Sink sink(out_path);
    auto v = parse_params(params_text, 5, "dickson-map");
    tep::DicksonParams params{v[0], v[1], v[2], v[3], v[4]};
    tep::Deg2Params mapped = tep::dickson_to_theorem1(params);
    nlohmann::json record;
    record["dickson"] = {v[0].get_str(), v[1].get_str(), v[2].get_str(), v[3].get_str(),
                         v[4].get_str()};
    record["theorem1_params"] = {mapped.p.get_str(), mapped.q.get_str(), mapped.r.get_str(),
                                 mapped.a.get_str(), mapped.b.get_str(), mapped.c.get_str()};
    record["factor"] = BigInt(params.D + params.G).get_str();
    record["equivalent"] = tep::verify_dickson_equivalence(params);
    sink.stream() << record.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for equal-power-sum solution families: generators, "
                 "symbolic identity checks, and brute-force search"};
    app.require_subcommand(1);

    std::string family, params_text, xs_text, ys_text, out_path;
    std::string format = "json";
    int k = 0, height = 0, param_bound = 6, jobs = 1;
    bool emit_residuals = false;

    auto* generate = app.add_subcommand("generate", "Generate a parametric family instance");
    generate->add_option("family", family, "Family name")
        ->required()
        ->check(CLI::IsMember({"deg2", "dickson", "triads", "deg3", "deg124", "deg5"}));
    generate->add_option("--params", params_text, "Comma-separated integer parameters")
        ->required();
    generate->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    generate->add_option("--out", out_path, "Write output to a file");

    auto* verify_cmd = app.add_subcommand("verify", "Verify a candidate solution");
    verify_cmd->add_option("--k", k, "Degree (checks exponents 1..k)")
        ->required()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--x", xs_text, "Comma-separated x side")->required();
    verify_cmd->add_option("--y", ys_text, "Comma-separated y side")->required();
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    verify_cmd->add_option("--out", out_path);

    auto* identities = app.add_subcommand("identities", "Run the symbolic identity suite");
    identities->add_flag("--emit-residuals", emit_residuals, "Print residual polynomials");

    auto* search = app.add_subcommand("search", "Exhaustive height-bounded search");
    search->add_option("what", family, "deg2, deg3 or triads")
        ->required()
        ->check(CLI::IsMember({"deg2", "deg3", "triads"}));
    search->add_option("--height", height, "Entry bound")->required()->check(CLI::PositiveNumber);
    search->add_option("--param-bound", param_bound)->check(CLI::NonNegativeNumber);
    search->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    search->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    search->add_option("--out", out_path);

    auto* coverage = app.add_subcommand("coverage", "Brute-force coverage measurement");
    coverage->add_option("what", family, "deg2 or deg3")
        ->required()
        ->check(CLI::IsMember({"deg2", "deg3"}));
    coverage->add_option("--height", height, "Entry bound")
        ->required()
        ->check(CLI::PositiveNumber);
    coverage->add_option("--param-bound", param_bound, "Parameter box for the deg3 family")
        ->check(CLI::NonNegativeNumber);
    coverage->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    coverage->add_option("--out", out_path);

    auto* dickson_map = app.add_subcommand("dickson-map",
                                           "Map five-parameter values to family parameters");
    dickson_map->add_option("--params", params_text, "A,B,C,D,G")->required();
    dickson_map->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(generate))
            return run_generate(family, params_text, format, out_path);
        if (app.got_subcommand(verify_cmd))
            return run_verify(k, xs_text, ys_text, format, out_path);
        if (app.got_subcommand(identities)) return run_identities(emit_residuals);
        if (app.got_subcommand(search)) return run_search(family, height, jobs, format, out_path);
        if (app.got_subcommand(coverage))
            return run_coverage(family, height, param_bound, jobs, out_path);
        if (app.got_subcommand(dickson_map)) return run_dickson_map(params_text, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
