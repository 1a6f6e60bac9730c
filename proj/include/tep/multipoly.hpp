#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tep/bigint.hpp"

namespace tep {

/// Thrown by eval()/substitute() when a variable has no value or image.
struct MissingVariableError : std::invalid_argument {
    explicit MissingVariableError(const std::string& var)
        : std::invalid_argument("no value for variable '" + var + "'"), variable(var) {}
    std::string variable;
};

/// Thrown by decompose_elementary() on non-symmetric input; carries a
/// witness transposition that changes the polynomial.
struct NotSymmetricError : std::invalid_argument {
    NotSymmetricError(const std::string& u, const std::string& v)
        : std::invalid_argument("polynomial is not symmetric: swapping '" + u + "' and '" + v +
                                "' changes it"),
          var_a(u),
          var_b(v) {}
    std::string var_a, var_b;
};

// Fixed global variable order used for canonical forms and printing:
// p q r s a b c A B C D G M K f g h u v w, then e1 e2 e3 ..., then
// anything else alphabetically.
bool var_less(const std::string& lhs, const std::string& rhs);

/// Sparse multivariate polynomial with BigInt coefficients over named
/// variables. Canonical form: the variable list is minimal (every listed
/// variable occurs in some term) and sorted by the global order; no stored
/// coefficient is zero; the zero polynomial is the empty term map. Equality
/// is structural, so "identity holds" is "difference is zero".
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, BigInt>;  // keys have arity == vars().size()

    MultiPoly() = default;  // zero
    MultiPoly(long value) : MultiPoly(BigInt(value)) {}
    MultiPoly(BigInt value);
    static MultiPoly var(const std::string& name);
    static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    long total_degree() const;  // -1 for the zero polynomial

    /// Coefficient of the given monomial (variables not mentioned have
    /// exponent 0); zero when the monomial is absent.
    BigInt coeff(const std::map<std::string, std::uint32_t>& monomial) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
        return lhs.vars_ == rhs.vars_ && lhs.terms_ == rhs.terms_;
    }

    /// Exact value at an integer point; the assignment must cover every
    /// variable of the polynomial (extra entries are ignored).
    BigInt eval(const std::map<std::string, BigInt>& point) const;

    /// Composition: every variable is replaced by its image polynomial.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& images) const;

    /// True iff invariant under every transposition of adjacent group
    /// variables (transpositions generate the full symmetric group).
    /// Group variables absent from the polynomial count as degree 0.
    bool symmetric_under(const std::vector<std::string>& group) const;

    /// First adjacent transposition of `group` that changes the polynomial,
    /// or nullopt when symmetric.
    std::optional<std::pair<std::string, std::string>> violating_transposition(
        const std::vector<std::string>& group) const;

    /// Same polynomial embedded into a superset of its variables
    /// (extra variables carry exponent 0 columns).
    MultiPoly with_vars(std::vector<std::string> target) const;

    /// Debug rendering: monomials sorted by the global variable order,
    /// e.g. "2*e1*e3 - 8*e4".
    std::string str() const;

private:
    void canonicalize();
    void add_term(const Exponents& exps, const BigInt& coefficient);

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// base^exponent; negative exponents are rejected.
MultiPoly pow(const MultiPoly& base, long exponent);

/// The derived variables e_1..e_n representing the elementary symmetric
/// polynomials of an n-variable source set.
struct ElemSymBasis {
    explicit ElemSymBasis(std::size_t arity);
    static std::string name(std::size_t i);  // 1-based: "e1", "e2", ...

    std::size_t arity = 0;
    std::vector<std::string> names;
};

/// Degree-k elementary symmetric polynomial in the given variables
/// (e_0 = 1; k beyond the arity gives 0).
MultiPoly elementary_symmetric(const std::vector<std::string>& vars, std::size_t k);

/// Rewrites a polynomial symmetric in `source_vars` as a polynomial in
/// e_1..e_n, by leading-term reduction in lexicographic order. The result is
/// audited by back-substitution before it is returned. Throws
/// NotSymmetricError (with a witness transposition) on non-symmetric input;
/// variables outside the source set are rejected.
MultiPoly decompose_elementary(const MultiPoly& poly, const std::vector<std::string>& source_vars);

/// Back-substitution: replaces each e_i with the elementary symmetric
/// polynomial of `source_vars`. Inverse of decompose_elementary.
MultiPoly expand_elementary(const MultiPoly& in_e_basis,
                            const std::vector<std::string>& source_vars);

}  // namespace tep
