#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "tep/generators.hpp"
#include "tep/records.hpp"
#include "tep/solution.hpp"

using namespace tep;

namespace {

TepSolution classic() { return TepSolution(2, {1, 5, 6}, {2, 3, 7}); }

Deg2Params random_deg2_params(std::mt19937_64& rng, long bound = 50) {
    auto v = testutil::random_ints(rng, 6, -bound, bound);
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

}  // namespace

TEST_CASE("power_sum") {
    CHECK(power_sum({1, 5, 6}, 2) == 62);
    CHECK(power_sum({}, 3) == 0);
    CHECK(power_sum({1, 2, 3}, 1) == 6);
    CHECK(power_sum({-2, 2}, 3) == 0);
    CHECK_THROWS_AS(power_sum({1}, 0), std::invalid_argument);
}

TEST_CASE("verify on the classic smallest solution") {
    SigmaReport rep = verify(classic());
    CHECK(rep.valid);
    CHECK_FALSE(rep.trivial);
    REQUIRE(rep.exponents == std::vector<int>{1, 2});
    CHECK(rep.sums_x == std::vector<BigInt>{12, 62});
    CHECK(rep.sums_y == std::vector<BigInt>{12, 62});
}

TEST_CASE("verify flags trivial and invalid candidates without throwing") {
    SigmaReport trivial = verify(TepSolution(2, {1, 2, 3}, {3, 2, 1}));
    CHECK(trivial.valid);
    CHECK(trivial.trivial);

    SigmaReport invalid = verify(TepSolution(2, {1, 2, 3}, {1, 2, 4}));
    CHECK_FALSE(invalid.valid);
    CHECK(invalid.sums_x[0] == 6);
    CHECK(invalid.sums_y[0] == 7);

    SigmaReport zero = verify(TepSolution(2, {0, 0}, {0, 0}));
    CHECK(zero.valid);
    CHECK(zero.trivial);
}

TEST_CASE("solution shape") {
    CHECK(classic().ideal());
    CHECK(classic().consecutive());
    TepSolution triple({1, 2, 4}, {2, -13, 11}, {-14, 7, 7});
    CHECK(triple.degree() == 4);
    CHECK_FALSE(triple.consecutive());
    CHECK_FALSE(triple.ideal());
    CHECK_THROWS_AS(TepSolution(2, {1, 2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(TepSolution(2, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(TepSolution(std::vector<int>{2, 1}, {1}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(TepSolution(std::vector<int>{0, 1}, {1}, {1}), std::invalid_argument);
}

TEST_CASE("affine_map") {
    TepSolution mapped = affine_map(classic(), BigRat(2), BigRat(1));
    CHECK(mapped.xs() == std::vector<BigInt>{3, 11, 13});
    CHECK(mapped.ys() == std::vector<BigInt>{5, 7, 15});
    SigmaReport rep = verify(mapped);
    CHECK(rep.valid);
    CHECK(rep.sums_x == std::vector<BigInt>{27, 299});

    CHECK(affine_map(classic(), BigRat(1), BigRat(0)) == classic());

    // half-scaling an all-even solution is exact
    TepSolution doubled = affine_map(classic(), BigRat(2), BigRat(0));
    CHECK(affine_map(doubled, BigRat(1, 2), BigRat(0)) == classic());

    CHECK_THROWS_AS(affine_map(classic(), BigRat(1, 2), BigRat(0)), NonIntegerResultError);
    try {
        affine_map(classic(), BigRat(1, 2), BigRat(0));
    } catch (const NonIntegerResultError& e) {
        CHECK(e.value == BigRat(1, 2));
    }
    CHECK_THROWS_AS(affine_map(classic(), BigRat(0), BigRat(1)), std::invalid_argument);
}

TEST_CASE("normalize") {
    TepSolution scaled(2, {4, 20, 24}, {28, 8, 12});
    CHECK(normalize(scaled) == classic());
    CHECK(normalize(normalize(scaled)) == normalize(scaled));
    CHECK(normalize(classic()) == classic());

    TepSolution negated(2, {-1, -5, -6}, {-2, -3, -7});
    CHECK(normalize(negated) == classic());

    CHECK_THROWS_AS(normalize(TepSolution(2, {0, 0}, {0, 0})), std::invalid_argument);

    // negation-symmetric solutions still get a canonical form
    TepSolution sym(5, {2, -13, 11, -2, 13, -11}, {-14, 7, 7, 14, -7, -7});
    TepSolution canon = normalize(sym);
    CHECK(normalize(canon) == canon);
    CHECK(normalize(affine_map(sym, BigRat(-3), BigRat(0))) == canon);
}

TEST_CASE("is_scalar_multiple") {
    CHECK(is_scalar_multiple(TepSolution(2, {4, 20, 24}, {28, 8, 12}),
                             TepSolution(2, {1, 5, 6}, {7, 2, 3})));
    CHECK_FALSE(is_scalar_multiple(classic(), TepSolution(2, {1, 5, 6}, {2, 3, 8})));
    CHECK(is_scalar_multiple(classic(), classic()));
    CHECK_THROWS_AS(is_scalar_multiple(classic(), TepSolution(2, {1, 5}, {2, 3})),
                    std::invalid_argument);
    // an explicit 1..k exponent list is the same solution kind, not a mismatch
    CHECK(is_scalar_multiple(classic(),
                             TepSolution(std::vector<int>{1, 2}, {1, 5, 6}, {2, 3, 7})));
    CHECK_THROWS_AS(
        is_scalar_multiple(classic(), TepSolution(std::vector<int>{1, 3}, {1, 5, 6}, {2, 3, 7})),
        std::invalid_argument);
}

TEST_CASE("JSON record follows the schema with decimal-string integers") {
    nlohmann::json rec = solution_record(classic());
    CHECK(rec["k"] == 2);
    CHECK(rec["x"] == nlohmann::json::array({"1", "5", "6"}));
    CHECK(rec["y"] == nlohmann::json::array({"2", "3", "7"}));
    CHECK(rec["sigma"] == nlohmann::json::array({"12", "62"}));
    CHECK(rec["valid"] == true);
    CHECK(rec["trivial"] == false);
    CHECK_FALSE(rec.contains("j"));

    // values beyond 64 bits survive as strings
    BigInt huge("123456789012345678901234567890");
    nlohmann::json big = solution_record(TepSolution(1, {huge}, {huge}));
    CHECK(big["x"][0] == "123456789012345678901234567890");

    nlohmann::json triple =
        solution_record(TepSolution(std::vector<int>{1, 2, 4}, {2, -13, 11}, {-14, 7, 7}));
    CHECK(triple["k"] == 4);
    CHECK(triple["j"] == nlohmann::json::array({1, 2, 4}));
    CHECK(triple["sigma"] == nlohmann::json::array({"0", "294", "43218"}));
    CHECK(triple["valid"] == true);
}

TEST_CASE("verify is invariant under within-side permutation and side swap") {
    auto rng = testutil::make_rng(0xa11ce);
    for (int iter = 0; iter < 200; ++iter) {
        TepSolution sol = gen_deg2(random_deg2_params(rng));
        std::vector<BigInt> xs = sol.xs(), ys = sol.ys();
        std::shuffle(xs.begin(), xs.end(), rng);
        std::shuffle(ys.begin(), ys.end(), rng);
        if (iter % 2) std::swap(xs, ys);
        SigmaReport base = verify(sol);
        SigmaReport moved = verify(TepSolution(2, xs, ys));
        CHECK(base.valid == moved.valid);
        CHECK(base.trivial == moved.trivial);
        CHECK(base.sums_x == (iter % 2 ? moved.sums_y : moved.sums_x));
    }
}

TEST_CASE("affine_map preserves validity on random valid solutions") {
    auto rng = testutil::make_rng(0xa11cf);
    for (int iter = 0; iter < 1000; ++iter) {
        TepSolution sol = gen_deg2(random_deg2_params(rng));
        // random rational M = num/den with the solution pre-scaled by den so
        // images stay integral; K integer
        const long num = std::uniform_int_distribution<long>(-6, 6)(rng);
        const long den = std::uniform_int_distribution<long>(1, 4)(rng);
        if (num == 0) continue;
        TepSolution scaled = affine_map(sol, BigRat(den), BigRat(0));
        TepSolution image = affine_map(scaled, BigRat(num, den),
                                       BigRat(testutil::random_int(rng, -100, 100)));
        CHECK(verify(image).valid);
    }
}

TEST_CASE("degree-2 validity is preserved under translation") {
    auto rng = testutil::make_rng(0xa11d0);
    for (int iter = 0; iter < 1000; ++iter) {
        TepSolution sol = gen_deg2(random_deg2_params(rng));
        BigRat t(testutil::random_int(rng, -1000, 1000));
        CHECK(verify(affine_map(sol, BigRat(1), t)).valid);
    }
}

TEST_CASE("normalize is constant on orbits") {
    auto rng = testutil::make_rng(0xa11d1);
    int done = 0;
    while (done < 200) {
        TepSolution sol = gen_deg2(random_deg2_params(rng));
        bool zero = std::all_of(sol.xs().begin(), sol.xs().end(),
                                [](const BigInt& v) { return sgn(v) == 0; }) &&
                    std::all_of(sol.ys().begin(), sol.ys().end(),
                                [](const BigInt& v) { return sgn(v) == 0; });
        if (zero) continue;
        ++done;
        TepSolution canon = normalize(sol);
        CHECK(normalize(canon) == canon);

        std::vector<BigInt> xs = sol.xs(), ys = sol.ys();
        std::shuffle(xs.begin(), xs.end(), rng);
        std::shuffle(ys.begin(), ys.end(), rng);
        if (done % 2) std::swap(xs, ys);
        long scale = std::uniform_int_distribution<long>(1, 5)(rng);
        if (done % 3 == 0) scale = -scale;
        for (auto& v : xs) v *= scale;
        for (auto& v : ys) v *= scale;
        CHECK(normalize(TepSolution(2, xs, ys)) == canon);
    }
}
