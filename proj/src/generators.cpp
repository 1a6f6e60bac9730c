#include "tep/generators.hpp"

#include "tep/families.hpp"

namespace tep {

namespace {

template <std::size_t N>
TepSolution split_entries(int degree, const std::array<BigInt, N>& entries) {
    static_assert(N % 2 == 0);
    std::vector<BigInt> xs(entries.begin(), entries.begin() + N / 2);
    std::vector<BigInt> ys(entries.begin() + N / 2, entries.end());
    return TepSolution(degree, std::move(xs), std::move(ys));
}

}  // namespace

TepSolution gen_deg2(const Deg2Params& P) {
    return split_entries(2, families::deg2_entries(P.p, P.q, P.r, P.a, P.b, P.c));
}

TepSolution gen_dickson(const DicksonParams& P) {
    return split_entries(2, families::dickson_entries(P.A, P.B, P.C, P.D, P.G));
}

Deg2Params dickson_to_theorem1(const DicksonParams& P) {
    auto m = families::dickson_to_deg2_params(P.A, P.B, P.C, P.D, P.G);
    return Deg2Params{m[0], m[1], m[2], m[3], m[4], m[5]};
}

TriadPair gen_triads(const QuadParams& P) {
    auto e = families::triad_entries(P.p, P.q, P.r, P.s);
    return TriadPair{{e[0], e[1], e[2]}, {e[3], e[4], e[5]}};
}

TepSolution gen_deg3_interim(const QuadParams& P) {
    return split_entries(3, families::deg3_interim_entries(P.p, P.q, P.r, P.s));
}

TepSolution gen_deg3(const QuadParams& P) {
    return split_entries(3, families::deg3_entries(P.p, P.q, P.r, P.s));
}

BigInt deg3_shift_doubled(const QuadParams& P) {
    return families::deg3_shift_doubled(P.p, P.q, P.r, P.s);
}

TepSolution gen_eqsums124(const Deg2Params& P) {
    auto e = families::eqsums124_entries(P.p, P.q, P.r, P.a, P.b, P.c);
    return TepSolution(std::vector<int>{1, 2, 4}, {e[0], e[1], e[2]}, {e[3], e[4], e[5]});
}

TepSolution gen_deg5(const Deg2Params& P) {
    auto e = families::deg5_entries(P.p, P.q, P.r, P.a, P.b, P.c);
    std::vector<BigInt> xs(e.begin(), e.begin() + 6);
    std::vector<BigInt> ys(e.begin() + 6, e.end());
    return TepSolution(5, std::move(xs), std::move(ys));
}

}  // namespace tep
