#pragma once

#include <array>

// The parametric solution families, written once over a generic ring type T
// (exact integers for generated solutions, polynomials for symbolic proofs).
// Entry order follows the theorem displays exactly: x-entries first, then
// y-entries, so entrywise identity checks line up before any normalization.
namespace tep::families {

// x1..x3, y1..y3 from a six-argument form phi(f,g,h,u,v,w); the first three
// arguments stay fixed while the last three cycle / swap per the display.
template <class T, class Phi>
std::array<T, 6> six_param_pattern(Phi&& phi, const T& p, const T& q, const T& r, const T& a,
                                   const T& b, const T& c) {
    return {phi(p, q, r, a, b, c), phi(p, q, r, b, c, a), phi(p, q, r, c, a, b),
            phi(p, q, r, a, c, b), phi(p, q, r, c, b, a), phi(p, q, r, b, a, c)};
}

// X1..X3, Y1..Y3 from a four-argument form phi(a,b,c,d).
template <class T, class Phi>
std::array<T, 6> triad_pattern(Phi&& phi, const T& p, const T& q, const T& r, const T& s) {
    return {phi(p, q, r, s), phi(p, r, s, q), phi(p, s, q, r),
            phi(p, q, s, r), phi(p, r, q, s), phi(p, s, r, q)};
}

// x1..x4, y1..y4 from a four-argument form phi(a,b,c,d).
template <class T, class Phi>
std::array<T, 8> quad_pattern(Phi&& phi, const T& p, const T& q, const T& r, const T& s) {
    return {phi(p, q, r, s), phi(p, r, s, q), phi(p, s, q, r), phi(q, r, p, s),
            phi(p, q, s, r), phi(p, r, q, s), phi(p, s, r, q), phi(q, s, p, r)};
}

template <class T>
T deg2_phi(const T& f, const T& g, const T& h, const T& u, const T& v, const T& w) {
    return f * u + g * v + h * w;
}

template <class T>
std::array<T, 6> deg2_entries(const T& p, const T& q, const T& r, const T& a, const T& b,
                              const T& c) {
    return six_param_pattern<T>(deg2_phi<T>, p, q, r, a, b, c);
}

// The five-parameter complete degree-2 solution.
template <class T>
std::array<T, 6> dickson_entries(const T& A, const T& B, const T& C, const T& D, const T& G) {
    return {A * D + C, A * G + B * D + C, B * G + C,
            A * D + B * G + C, B * D + C, A * G + C};
}

// Parameter substitution mapping the five-parameter form into the
// six-parameter family; the generated solution picks up a factor D+G.
template <class T>
std::array<T, 6> dickson_to_deg2_params(const T& A, const T& B, const T& C, const T& D,
                                        const T& G) {
    return {A * D + A * G + C, C, B * D + B * G + C, D, G, T(0)};
}

template <class T>
T triad_phi(const T& a, const T& b, const T& c, const T& d) {
    return (a * b + c * d) * (a * c - b * d);
}

template <class T>
std::array<T, 6> triad_entries(const T& p, const T& q, const T& r, const T& s) {
    return triad_pattern<T>(triad_phi<T>, p, q, r, s);
}

template <class T>
T deg3_phi(const T& a, const T& b, const T& c, const T& d) {
    return a * a * b * c + a * b * c * c + a * c * c * d + a * c * d * d + b * b * c * d +
           b * c * c * d;
}

template <class T>
std::array<T, 8> deg3_entries(const T& p, const T& q, const T& r, const T& s) {
    return quad_pattern<T>(deg3_phi<T>, p, q, r, s);
}

template <class T>
T deg3_interim_phi(const T& a, const T& b, const T& c, const T& d) {
    return (b * c - b * d - c * d) * (a * a) - (a * c + a * d - c * d) * (b * b) +
           (a * b + a * d + b * d) * (c * c) - (a * b - a * c + b * c) * (d * d);
}

template <class T>
std::array<T, 8> deg3_interim_entries(const T& p, const T& q, const T& r, const T& s) {
    return quad_pattern<T>(deg3_interim_phi<T>, p, q, r, s);
}

// Twice the affine shift K linking the interim and final degree-3 families:
// final = interim/2 + K entrywise, so 2*final - interim equals this value.
template <class T>
T deg3_shift_doubled(const T& p, const T& q, const T& r, const T& s) {
    return p * p * (q * r + q * s + r * s) + q * q * (p * r + p * s + r * s) +
           r * r * (p * q + p * s + q * s) + s * s * (p * q + p * r + q * r);
}

template <class T>
T eqsums124_psi(const T& f, const T& g, const T& h, const T& u, const T& v, const T& w) {
    return f * (v - w) + g * (w - u) + h * (u - v);
}

template <class T>
std::array<T, 6> eqsums124_entries(const T& p, const T& q, const T& r, const T& a, const T& b,
                                   const T& c) {
    return six_param_pattern<T>(eqsums124_psi<T>, p, q, r, a, b, c);
}

// Degree-5 ideal solution: the three-entry system extended with the
// negatives of its entries, killing every odd power sum.
template <class T>
std::array<T, 12> deg5_entries(const T& p, const T& q, const T& r, const T& a, const T& b,
                               const T& c) {
    std::array<T, 6> base = eqsums124_entries(p, q, r, a, b, c);
    return {base[0], base[1], base[2], T(0) - base[0], T(0) - base[1], T(0) - base[2],
            base[3], base[4], base[5], T(0) - base[3], T(0) - base[4], T(0) - base[5]};
}

}  // namespace tep::families
