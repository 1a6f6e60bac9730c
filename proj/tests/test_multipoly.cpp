#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "tep/multipoly.hpp"

using namespace tep;

namespace {

MultiPoly V(const char* name) { return MultiPoly::var(name); }

// Random sparse polynomial over a subset of {p,q,r,s}.
MultiPoly random_poly(std::mt19937_64& rng, int max_terms = 5, std::uint32_t max_exp = 2) {
    static const std::vector<std::string> names = {"p", "q", "r", "s"};
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    std::uniform_int_distribution<long> coeff(-9, 9);
    MultiPoly out;
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        MultiPoly term{BigInt(coeff(rng))};
        for (const auto& name : names) {
            const std::uint32_t e = exp(rng);
            if (e > 0) term *= pow(V(name.c_str()), e);
        }
        out += term;
    }
    return out;
}

// All-permutations symmetry oracle (the implementation only checks adjacent
// transpositions).
bool symmetric_oracle(const MultiPoly& f, std::vector<std::string> group) {
    std::sort(group.begin(), group.end());
    std::vector<std::size_t> idx(group.size());
    std::iota(idx.begin(), idx.end(), 0);
    do {
        std::map<std::string, MultiPoly> images;
        for (const auto& v : f.vars()) images.emplace(v, MultiPoly::var(v));
        for (std::size_t i = 0; i < group.size(); ++i)
            images[group[i]] = MultiPoly::var(group[idx[i]]);
        if (f.substitute(images) != f) return false;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return true;
}

}  // namespace

TEST_CASE("construction produces canonical sparse form") {
    MultiPoly three_terms = V("p") * V("a") + V("q") * V("b") + V("r") * V("c");
    CHECK(three_terms.terms().size() == 3);
    CHECK(three_terms.coeff({{"p", 1}, {"a", 1}}) == 1);

    CHECK((V("p") + V("q")) * (V("p") - V("q")) == V("p") * V("p") - V("q") * V("q"));

    // (pq+rs)(pr-qs) expanded by hand: p^2qr - pq^2s + pr^2s - qrs^2.
    MultiPoly phi = (V("p") * V("q") + V("r") * V("s")) * (V("p") * V("r") - V("q") * V("s"));
    CHECK(phi.terms().size() == 4);
    CHECK(phi.coeff({{"p", 2}, {"q", 1}, {"r", 1}}) == 1);
    CHECK(phi.coeff({{"p", 1}, {"q", 2}, {"s", 1}}) == -1);
    CHECK(phi.coeff({{"p", 1}, {"r", 2}, {"s", 1}}) == 1);
    CHECK(phi.coeff({{"q", 1}, {"r", 1}, {"s", 2}}) == -1);

    CHECK(MultiPoly().is_zero());
    CHECK(MultiPoly(0).is_zero());
    CHECK((V("p") - V("p")).is_zero());
    CHECK(MultiPoly().total_degree() == -1);
}

TEST_CASE("structurally equal expressions yield identical term maps") {
    MultiPoly a = (V("p") + 1) * (V("p") + 1);
    MultiPoly b = V("p") * V("p") + 2 * V("p") + 1;
    CHECK(a == b);
    CHECK(a.str() == b.str());
}

TEST_CASE("negative exponents are rejected") {
    CHECK_THROWS_AS(pow(V("p"), -1), std::invalid_argument);
}

TEST_CASE("eval") {
    MultiPoly f = (V("p") + V("q") + V("r")) * (V("a") + V("b") + V("c"));
    std::map<std::string, BigInt> point = {{"p", 1}, {"q", 2}, {"r", 3},
                                           {"a", 1}, {"b", 2}, {"c", 4}};
    CHECK(f.eval(point) == 42);
    CHECK(MultiPoly().eval({}) == 0);
    CHECK(MultiPoly().eval(point) == 0);

    MultiPoly g = V("p") * V("p") - V("q") * V("q");
    CHECK(g.eval({{"p", 7}, {"q", 7}}) == 0);

    CHECK_THROWS_AS(g.eval({{"p", 7}}), MissingVariableError);
    try {
        g.eval({{"p", 7}});
    } catch (const MissingVariableError& e) {
        CHECK(e.variable == "q");
    }
}

TEST_CASE("substitute") {
    MultiPoly f = V("p") * V("a") + V("q") * V("b") + V("r") * V("c");
    std::map<std::string, MultiPoly> images = {
        {"p", V("r") - V("q")}, {"q", V("p") - V("r")}, {"r", V("q") - V("p")},
        {"a", V("a")},          {"b", V("b")},          {"c", V("c")}};
    MultiPoly expected = V("p") * (V("b") - V("c")) + V("q") * (V("c") - V("a")) +
                         V("r") * (V("a") - V("b"));
    CHECK(f.substitute(images) == expected);

    std::map<std::string, MultiPoly> identity;
    for (const auto& v : f.vars()) identity.emplace(v, MultiPoly::var(v));
    CHECK(f.substitute(identity) == f);

    MultiPoly p2 = V("p") * V("p");
    CHECK(p2.substitute({{"p", V("p") + 1}}) == V("p") * V("p") + 2 * V("p") + 1);

    CHECK_THROWS_AS(f.substitute({{"p", V("p")}}), MissingVariableError);
}

TEST_CASE("symmetric_under") {
    MultiPoly f = (V("p") + V("q") + V("r")) * (V("a") + V("b") + V("c"));
    CHECK(f.symmetric_under({"p", "q", "r"}));
    CHECK(f.symmetric_under({"a", "b", "c"}));

    CHECK_FALSE((V("p") - V("q")).symmetric_under({"p", "q"}));

    MultiPoly sigma2 = (V("p") * V("p") + V("q") * V("q") + V("r") * V("r")) *
                           (V("a") * V("a") + V("b") * V("b") + V("c") * V("c")) +
                       2 * (V("p") * V("q") + V("q") * V("r") + V("r") * V("p")) *
                           (V("a") * V("b") + V("b") * V("c") + V("c") * V("a"));
    CHECK(sigma2.symmetric_under({"a", "b", "c"}));
    CHECK(sigma2.symmetric_under({"p", "q", "r"}));

    // group variables absent from the polynomial count as degree 0
    CHECK_FALSE((V("p") + V("q")).symmetric_under({"p", "q", "r"}));
    CHECK(MultiPoly(5).symmetric_under({"p", "q"}));
}

TEST_CASE("decompose_elementary on the named examples") {
    std::vector<std::string> pq = {"p", "q"};
    MultiPoly f = V("p") * V("p") + V("q") * V("q");
    CHECK(decompose_elementary(f, pq) == V("e1") * V("e1") - 2 * V("e2"));

    std::vector<std::string> pqrs = {"p", "q", "r", "s"};
    CHECK(decompose_elementary(V("p") + V("q") + V("r") + V("s"), pqrs) == V("e1"));

    CHECK_THROWS_AS(decompose_elementary(V("p") - V("q"), pq), NotSymmetricError);
    try {
        decompose_elementary(V("p") - V("q"), pq);
    } catch (const NotSymmetricError& e) {
        CHECK(e.var_a == "p");
        CHECK(e.var_b == "q");
    }

    CHECK_THROWS_AS(decompose_elementary(V("a"), pq), std::invalid_argument);
}

TEST_CASE("elementary symmetric polynomials") {
    std::vector<std::string> pqrs = {"p", "q", "r", "s"};
    CHECK(elementary_symmetric(pqrs, 0) == MultiPoly(1));
    CHECK(elementary_symmetric(pqrs, 1) == V("p") + V("q") + V("r") + V("s"));
    CHECK(elementary_symmetric(pqrs, 4) == V("p") * V("q") * V("r") * V("s"));
    CHECK(elementary_symmetric(pqrs, 5).is_zero());
    CHECK(elementary_symmetric(pqrs, 2).terms().size() == 6);
}

TEST_CASE("debug rendering") {
    MultiPoly f = 2 * V("e1") * V("e3") - 8 * V("e4");
    CHECK(f.str() == "2*e1*e3 - 8*e4");
    CHECK(MultiPoly().str() == "0");
    CHECK(MultiPoly(-7).str() == "-7");
    CHECK((V("p") * V("p") - V("q")).str() == "p^2 - q");
}

TEST_CASE("ring axioms on random polynomials") {
    auto rng = testutil::make_rng(0x5eed01);
    for (int iter = 0; iter < 200; ++iter) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        CHECK((a + b) - (a + b) == MultiPoly());
    }
}

TEST_CASE("eval commutes with substitute") {
    auto rng = testutil::make_rng(0x5eed02);
    for (int iter = 0; iter < 100; ++iter) {
        MultiPoly f = random_poly(rng);
        std::map<std::string, MultiPoly> images;
        for (const auto& v : f.vars()) images.emplace(v, random_poly(rng, 3, 1));
        MultiPoly composed = f.substitute(images);

        // point covering every variable seen anywhere
        std::map<std::string, BigInt> point;
        for (const auto& name : {"p", "q", "r", "s"}) point[name] = testutil::random_int(rng, -9, 9);
        std::map<std::string, BigInt> inner_values;
        for (const auto& [v, image] : images) inner_values[v] = image.eval(point);
        CHECK(composed.eval(point) == f.eval(inner_values));
    }
}

TEST_CASE("decompose_elementary round-trips on random symmetric polynomials") {
    auto rng = testutil::make_rng(0x5eed03);
    std::uniform_int_distribution<int> arity_dist(2, 4);
    const std::vector<std::string> all_names = {"p", "q", "r", "s"};
    int done = 0;
    while (done < 50) {
        const int arity = arity_dist(rng);
        std::vector<std::string> vars(all_names.begin(), all_names.begin() + arity);
        // symmetrize a random polynomial over the chosen variables
        MultiPoly g = random_poly(rng, 4, 2);
        std::vector<std::size_t> idx(vars.size());
        std::iota(idx.begin(), idx.end(), 0);
        MultiPoly f;
        do {
            std::map<std::string, MultiPoly> images;
            for (const auto& name : {"p", "q", "r", "s"}) images.emplace(name, V(name));
            for (std::size_t i = 0; i < vars.size(); ++i)
                images[vars[i]] = MultiPoly::var(vars[idx[i]]);
            f += g.substitute(images);
        } while (std::next_permutation(idx.begin(), idx.end()));
        bool in_range = true;
        for (const auto& v : f.vars())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) in_range = false;
        if (!in_range || f.total_degree() > 6) continue;
        ++done;
        MultiPoly decomposed = decompose_elementary(f, vars);
        CHECK(expand_elementary(decomposed, vars) == f);
    }
}

TEST_CASE("symmetric_under agrees with the all-permutations oracle") {
    auto rng = testutil::make_rng(0x5eed04);
    const std::vector<std::vector<std::string>> groups = {
        {"p", "q"}, {"p", "q", "r"}, {"p", "q", "r", "s"}};
    for (int iter = 0; iter < 120; ++iter) {
        const auto& group = groups[static_cast<std::size_t>(iter) % groups.size()];
        MultiPoly f = random_poly(rng, 4, 2);
        if (iter % 3 == 0) {
            // symmetrize so both answers are exercised
            MultiPoly sym;
            std::vector<std::size_t> idx(group.size());
            std::iota(idx.begin(), idx.end(), 0);
            do {
                std::map<std::string, MultiPoly> images;
                for (const auto& name : {"p", "q", "r", "s"}) images.emplace(name, V(name));
                for (std::size_t i = 0; i < group.size(); ++i)
                    images[group[i]] = MultiPoly::var(group[idx[i]]);
                sym += f.substitute(images);
            } while (std::next_permutation(idx.begin(), idx.end()));
            f = sym;
        }
        CHECK(f.symmetric_under(group) == symmetric_oracle(f, group));
    }
}
