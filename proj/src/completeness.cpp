#include "tep/completeness.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "tep/families.hpp"
#include "tep/multipoly.hpp"

namespace tep {

namespace {

void require_deg2_valid(const TepSolution& sol) {
    if (sol.degree() != 2 || sol.size() != 3)
        throw std::invalid_argument("expected a k=2, n=3 solution");
    if (!verify(sol).valid) throw std::invalid_argument("solution does not verify");
}

RecoveredDickson recover_from(const std::array<BigInt, 3>& X, const std::array<BigInt, 3>& Y) {
    RecoveredDickson rec;
    rec.C = X[0] + X[2] - Y[0];
    rec.AD = X[0] - rec.C;
    rec.BG = X[2] - rec.C;
    rec.BD = Y[1] - rec.C;
    rec.AG = Y[2] - rec.C;
    // X[0], X[2], Y[0], Y[1], Y[2] reproduce by construction; the remaining
    // constraints are the middle entry and the product identity.
    rec.consistent = (rec.AD * rec.BG == rec.AG * rec.BD) && (X[1] == rec.AG + rec.BD + rec.C);
    return rec;
}

constexpr std::array<std::array<int, 3>, 6> kPerms3 = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

template <class Fn>
bool for_each_arrangement(const TepSolution& sol, Fn&& fn) {
    for (int swap_sides = 0; swap_sides < 2; ++swap_sides) {
        const auto& xs = swap_sides ? sol.ys() : sol.xs();
        const auto& ys = swap_sides ? sol.xs() : sol.ys();
        for (const auto& px : kPerms3) {
            for (const auto& py : kPerms3) {
                std::array<BigInt, 3> X = {xs[px[0]], xs[px[1]], xs[px[2]]};
                std::array<BigInt, 3> Y = {ys[py[0]], ys[py[1]], ys[py[2]]};
                if (fn(X, Y)) return true;
            }
        }
    }
    return false;
}

// Rational five-parameter tuples realizing the recovered products. Only
// products are observable, so a gauge must be fixed; which one works depends
// on the zero pattern.
std::vector<std::array<BigRat, 5>> gauge_candidates(const RecoveredDickson& rec) {
    std::vector<std::array<BigRat, 5>> out;
    const BigRat C(rec.C);
    if (rec.AD != 0)
        out.push_back({BigRat(1), BigRat(rec.BD) / BigRat(rec.AD), C, BigRat(rec.AD),
                       BigRat(rec.AG)});
    if (rec.BD != 0)
        out.push_back({BigRat(rec.AD) / BigRat(rec.BD), BigRat(1), C, BigRat(rec.BD),
                       BigRat(rec.BG)});
    if (rec.AD == 0 && rec.BD == 0)
        out.push_back({BigRat(rec.AG), BigRat(rec.BG), C, BigRat(0), BigRat(1)});
    return out;
}

std::vector<BigInt> cleared(const std::vector<BigRat>& values) {
    BigInt l = 1;
    for (const BigRat& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (const BigRat& v : values) {
        BigRat scaled = v * BigRat(l);
        out.emplace_back(scaled.get_num());
    }
    return out;
}

}  // namespace

RecoveredDickson recover_dickson_arranged(const TepSolution& sol) {
    require_deg2_valid(sol);
    return recover_from({sol.xs()[0], sol.xs()[1], sol.xs()[2]},
                        {sol.ys()[0], sol.ys()[1], sol.ys()[2]});
}

std::optional<RecoveredDickson> recover_dickson(const TepSolution& sol) {
    require_deg2_valid(sol);
    std::optional<RecoveredDickson> found;
    for_each_arrangement(sol, [&](const auto& X, const auto& Y) {
        RecoveredDickson rec = recover_from(X, Y);
        if (rec.consistent) {
            found = rec;
            return true;
        }
        return false;
    });
    return found;
}

bool verify_dickson_equivalence(const DicksonParams& params) {
    TepSolution six = gen_deg2(dickson_to_theorem1(params));
    TepSolution five = gen_dickson(params);
    const BigInt factor = params.D + params.G;
    for (std::size_t i = 0; i < 3; ++i)
        if (six.xs()[i] != factor * five.xs()[i] || six.ys()[i] != factor * five.ys()[i])
            return false;
    return true;
}

bool dickson_equivalence_symbolic() {
    auto A = MultiPoly::var("A"), B = MultiPoly::var("B"), C = MultiPoly::var("C"),
         D = MultiPoly::var("D"), G = MultiPoly::var("G");
    auto mapped = families::dickson_to_deg2_params(A, B, C, D, G);
    auto six = families::deg2_entries(mapped[0], mapped[1], mapped[2], mapped[3], mapped[4],
                                      mapped[5]);
    auto five = families::dickson_entries(A, B, C, D, G);
    const MultiPoly factor = D + G;
    for (std::size_t i = 0; i < six.size(); ++i)
        if (!(six[i] - factor * five[i]).is_zero()) return false;
    return true;
}

bool theorem1_represents(const TepSolution& sol) {
    require_deg2_valid(sol);
    if (verify(sol).trivial)
        throw std::invalid_argument("theorem1_represents expects a nontrivial solution");
    return for_each_arrangement(sol, [&](const auto& X, const auto& Y) {
        RecoveredDickson rec = recover_from(X, Y);
        if (!rec.consistent) return false;
        for (const auto& [A, B, C, D, G] : gauge_candidates(rec)) {
            const BigRat p = A * D + A * G + C, q = C, r = B * D + B * G + C;
            // Both parameter groups are homogeneous degree 1 in the entries,
            // so denominators clear into an overall scalar.
            std::vector<BigInt> pqr = cleared({p, q, r});
            std::vector<BigInt> abc = cleared({D, G, BigRat(0)});
            TepSolution gen =
                gen_deg2({pqr[0], pqr[1], pqr[2], abc[0], abc[1], abc[2]});
            bool all_zero = true;
            for (const auto& side : {gen.xs(), gen.ys()})
                for (const BigInt& v : side)
                    if (sgn(v) != 0) all_zero = false;
            if (all_zero) continue;
            if (is_scalar_multiple(gen, sol)) return true;
        }
        return false;
    });
}

namespace {

// Sorted n-tuples over [0, height], bucketed by their first `degree` power
// sums (desk-scale heights keep these keys within 64 bits). Pair search
// happens inside buckets only; the bucket loop is what jobs partitions.
struct EnumerationPlan {
    std::vector<std::vector<std::vector<BigInt>>> buckets;
};

EnumerationPlan bucket_tuples(int height, int arity, int degree) {
    EnumerationPlan plan;
    std::map<std::vector<long long>, std::size_t> index;
    std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
    while (true) {
        std::vector<long long> key;
        key.reserve(static_cast<std::size_t>(degree));
        for (int j = 1; j <= degree; ++j) {
            long long sum = 0;
            for (int v : tuple) {
                long long term = 1;
                for (int t = 0; t < j; ++t) term *= v;
                sum += term;
            }
            key.push_back(sum);
        }
        auto [it, inserted] = index.try_emplace(key, plan.buckets.size());
        if (inserted) plan.buckets.emplace_back();
        plan.buckets[it->second].emplace_back(tuple.begin(), tuple.end());

        int i = arity - 1;
        while (i >= 0 && tuple[static_cast<std::size_t>(i)] == height) --i;
        if (i < 0) break;
        const int next = tuple[static_cast<std::size_t>(i)] + 1;
        for (int j2 = i; j2 < arity; ++j2) tuple[static_cast<std::size_t>(j2)] = next;
    }
    return plan;
}

std::vector<TepSolution> enumerate_ideal(int height, int arity, int degree, int jobs) {
    if (height < 1) throw std::invalid_argument("height must be >= 1");
    EnumerationPlan plan = bucket_tuples(height, arity, degree);
    const int workers = std::max(1, jobs);

    std::vector<std::vector<TepSolution>> emitted(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        for (std::size_t b = static_cast<std::size_t>(w); b < plan.buckets.size();
             b += static_cast<std::size_t>(workers)) {
            const auto& bucket = plan.buckets[b];
            for (std::size_t i = 0; i < bucket.size(); ++i)
                for (std::size_t j = i + 1; j < bucket.size(); ++j)
                    emitted[static_cast<std::size_t>(w)].push_back(
                        normalize(TepSolution(degree, bucket[i], bucket[j])));
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    // Deterministic merge-and-dedup, independent of the partitioning.
    std::vector<TepSolution> merged;
    for (auto& part : emitted)
        for (auto& sol : part) merged.push_back(std::move(sol));
    std::sort(merged.begin(), merged.end(), solution_less);
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged;
}

BigRat coverage_fraction(const CoverageReport& report) {
    if (report.found == 0) return BigRat(1);
    return BigRat(static_cast<long>(report.covered)) / BigRat(static_cast<long>(report.found));
}

}  // namespace

std::vector<TepSolution> enumerate_ideal_deg2(int height, int jobs) {
    return enumerate_ideal(height, 3, 2, jobs);
}

CoverageReport coverage_deg2(int height, int jobs) {
    CoverageReport report;
    report.height = height;
    std::vector<TepSolution> sols = enumerate_ideal_deg2(height, jobs);
    report.found = static_cast<long long>(sols.size());
    for (const TepSolution& sol : sols) {
        if (theorem1_represents(sol))
            ++report.covered;
        else
            report.unmatched.push_back(sol);
    }
    report.vacuous = (report.found == 0);
    report.coverage = coverage_fraction(report);
    return report;
}

std::vector<TepSolution> enumerate_ideal_deg3(int height, int jobs) {
    return enumerate_ideal(height, 4, 3, jobs);
}

std::vector<TepSolution> deg3_family_canonical(int param_bound) {
    std::vector<TepSolution> out;
    for (long p = -param_bound; p <= param_bound; ++p)
        for (long q = -param_bound; q <= param_bound; ++q)
            for (long r = -param_bound; r <= param_bound; ++r)
                for (long s = -param_bound; s <= param_bound; ++s) {
                    TepSolution sol = gen_deg3({BigInt(p), BigInt(q), BigInt(r), BigInt(s)});
                    if (verify(sol).trivial) continue;
                    out.push_back(normalize(sol));
                }
    std::sort(out.begin(), out.end(), solution_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CoverageReport coverage_deg3(int height, int param_bound, int jobs) {
    CoverageReport report;
    report.height = height;
    std::vector<TepSolution> sols = enumerate_ideal_deg3(height, jobs);
    std::vector<TepSolution> family = deg3_family_canonical(param_bound);
    report.found = static_cast<long long>(sols.size());
    for (const TepSolution& sol : sols) {
        if (std::binary_search(family.begin(), family.end(), sol, solution_less))
            ++report.covered;
        else
            report.unmatched.push_back(sol);
    }
    report.vacuous = (report.found == 0);
    report.coverage = coverage_fraction(report);
    return report;
}

std::vector<EqualSumProductTriads> search_triads(int height) {
    if (height < 1) throw std::invalid_argument("height must be >= 1");
    std::map<std::pair<long long, long long>, std::vector<std::array<int, 3>>> buckets;
    for (int u = 1; u <= height; ++u)
        for (int v = u; v <= height; ++v)
            for (int w = v; w <= height; ++w)
                buckets[{u + v + w, static_cast<long long>(u) * v * w}].push_back({u, v, w});
    std::vector<EqualSumProductTriads> out;
    for (const auto& [key, bucket] : buckets) {
        (void)key;
        for (std::size_t i = 0; i < bucket.size(); ++i)
            for (std::size_t j = i + 1; j < bucket.size(); ++j)
                out.push_back({{BigInt(bucket[i][0]), BigInt(bucket[i][1]), BigInt(bucket[i][2])},
                               {BigInt(bucket[j][0]), BigInt(bucket[j][1]), BigInt(bucket[j][2])}});
    }
    std::sort(out.begin(), out.end(), [](const auto& lhs, const auto& rhs) {
        const BigInt ls = lhs.first[0] + lhs.first[1] + lhs.first[2];
        const BigInt rs = rhs.first[0] + rhs.first[1] + rhs.first[2];
        if (ls != rs) return ls < rs;
        const BigInt lp = lhs.first[0] * lhs.first[1] * lhs.first[2];
        const BigInt rp = rhs.first[0] * rhs.first[1] * rhs.first[2];
        if (lp != rp) return lp < rp;
        if (lhs.first != rhs.first) return lhs.first < rhs.first;
        return lhs.second < rhs.second;
    });
    return out;
}

}  // namespace tep
