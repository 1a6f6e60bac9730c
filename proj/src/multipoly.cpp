#include "tep/multipoly.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string_view>

namespace tep {

namespace {

// rank class 0: the fixed name table; class 1: e<digits>; class 2: the rest.
struct VarRank {
    int cls;
    long num;          // table index or e-index
    std::string_view name;
};

VarRank rank_of(const std::string& name) {
    static constexpr std::array<std::string_view, 20> kTable = {
        "p", "q", "r", "s", "a", "b", "c", "A", "B", "C",
        "D", "G", "M", "K", "f", "g", "h", "u", "v", "w"};
    for (std::size_t i = 0; i < kTable.size(); ++i)
        if (kTable[i] == name) return {0, static_cast<long>(i), name};
    if (name.size() >= 2 && name[0] == 'e' &&
        std::all_of(name.begin() + 1, name.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        return {1, std::stol(name.substr(1)), name};
    return {2, 0, name};
}

}  // namespace

bool var_less(const std::string& lhs, const std::string& rhs) {
    VarRank a = rank_of(lhs), b = rank_of(rhs);
    if (a.cls != b.cls) return a.cls < b.cls;
    if (a.num != b.num) return a.num < b.num;
    return a.name < b.name;
}

MultiPoly::MultiPoly(BigInt value) {
    if (sgn(value) != 0) terms_.emplace(Exponents{}, std::move(value));
}

MultiPoly MultiPoly::var(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
    MultiPoly out;
    out.vars_ = {name};
    out.terms_.emplace(Exponents{1}, BigInt(1));
    return out;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, TermMap terms) {
    for (const auto& [exps, coeff] : terms) {
        (void)coeff;
        if (exps.size() != vars.size())
            throw std::invalid_argument("exponent vector arity does not match variable list");
    }
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate variable name");
    MultiPoly out;
    out.vars_ = std::move(vars);
    out.terms_ = std::move(terms);
    out.canonicalize();
    return out;
}

void MultiPoly::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (sgn(it->second) == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [exps, coeff] : terms_) {
        (void)coeff;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) used[i] = true;
    }
    const bool all_used = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
    const bool ordered = std::is_sorted(vars_.begin(), vars_.end(), var_less);
    if (all_used && ordered) return;

    // Rebuild with the used columns only, sorted by the global order.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) keep.push_back(i);
    std::sort(keep.begin(), keep.end(),
              [this](std::size_t i, std::size_t j) { return var_less(vars_[i], vars_[j]); });
    std::vector<std::string> new_vars;
    new_vars.reserve(keep.size());
    for (std::size_t i : keep) new_vars.push_back(vars_[i]);
    TermMap new_terms;
    for (auto& [exps, coeff] : terms_) {
        Exponents ne(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) ne[i] = exps[keep[i]];
        new_terms.emplace(std::move(ne), std::move(coeff));
    }
    vars_ = std::move(new_vars);
    terms_ = std::move(new_terms);
}

MultiPoly MultiPoly::with_vars(std::vector<std::string> target) const {
    std::sort(target.begin(), target.end(), var_less);
    target.erase(std::unique(target.begin(), target.end()), target.end());
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(target.begin(), target.end(), vars_[i], var_less);
        if (it == target.end() || *it != vars_[i])
            throw std::invalid_argument("with_vars: target set does not contain '" + vars_[i] + "'");
        pos[i] = static_cast<std::size_t>(it - target.begin());
    }
    MultiPoly out;
    for (const auto& [exps, coeff] : terms_) {
        Exponents ne(target.size(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i) ne[pos[i]] = exps[i];
        out.terms_.emplace(std::move(ne), coeff);
    }
    out.vars_ = std::move(target);
    return out;
}

long MultiPoly::total_degree() const {
    long best = -1;
    for (const auto& [exps, coeff] : terms_) {
        (void)coeff;
        long d = std::accumulate(exps.begin(), exps.end(), 0L);
        best = std::max(best, d);
    }
    return best;
}

BigInt MultiPoly::coeff(const std::map<std::string, std::uint32_t>& monomial) const {
    Exponents key(vars_.size(), 0);
    for (const auto& [name, exp] : monomial) {
        if (exp == 0) continue;
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) return 0;
        key[static_cast<std::size_t>(it - vars_.begin())] = exp;
    }
    auto it = terms_.find(key);
    return it == terms_.end() ? BigInt(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(*this);
    for (auto& [exps, coeff] : out.terms_) {
        (void)exps;
        coeff = -coeff;
    }
    return out;
}

void MultiPoly::add_term(const Exponents& exps, const BigInt& coefficient) {
    auto [it, inserted] = terms_.try_emplace(exps, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    if (this == &rhs) {
        for (auto& [exps, coeff] : terms_) {
            (void)exps;
            coeff *= 2;
        }
        return *this;
    }
    if (vars_ != rhs.vars_) {
        std::vector<std::string> merged;
        merged.reserve(vars_.size() + rhs.vars_.size());
        std::set_union(vars_.begin(), vars_.end(), rhs.vars_.begin(), rhs.vars_.end(),
                       std::back_inserter(merged), var_less);
        *this = with_vars(merged);
        MultiPoly other = rhs.with_vars(std::move(merged));
        for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
    } else {
        for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, coeff);
    }
    canonicalize();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<std::string> merged;
    merged.reserve(lhs.vars_.size() + rhs.vars_.size());
    std::set_union(lhs.vars_.begin(), lhs.vars_.end(), rhs.vars_.begin(), rhs.vars_.end(),
                   std::back_inserter(merged), var_less);
    MultiPoly a = lhs.with_vars(merged);
    MultiPoly b = rhs.with_vars(merged);
    MultiPoly out;
    out.vars_ = std::move(merged);
    MultiPoly::Exponents key(out.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < key.size(); ++i) key[i] = ea[i] + eb[i];
            out.add_term(key, ca * cb);
        }
    }
    out.canonicalize();
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

MultiPoly pow(const MultiPoly& base, long exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    MultiPoly result(1);
    MultiPoly square = base;
    long e = exponent;
    while (e > 0) {
        if (e & 1) result *= square;
        e >>= 1;
        if (e > 0) square *= square;
    }
    return result;
}

BigInt MultiPoly::eval(const std::map<std::string, BigInt>& point) const {
    std::vector<const BigInt*> values(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end()) throw MissingVariableError(vars_[i]);
        values[i] = &it->second;
    }
    BigInt total = 0;
    for (const auto& [exps, coeff] : terms_) {
        BigInt term = coeff;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) term *= pow_ui(*values[i], exps[i]);
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& images) const {
    std::vector<const MultiPoly*> image(vars_.size());
    Exponents max_exp(vars_.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = images.find(vars_[i]);
        if (it == images.end()) throw MissingVariableError(vars_[i]);
        image[i] = &it->second;
    }
    for (const auto& [exps, coeff] : terms_) {
        (void)coeff;
        for (std::size_t i = 0; i < exps.size(); ++i) max_exp[i] = std::max(max_exp[i], exps[i]);
    }
    // Image powers computed once per variable.
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        powers[i].reserve(max_exp[i] + 1);
        powers[i].emplace_back(1);
        for (std::uint32_t k = 1; k <= max_exp[i]; ++k)
            powers[i].push_back(powers[i].back() * *image[i]);
    }
    MultiPoly total;
    for (const auto& [exps, coeff] : terms_) {
        MultiPoly term{BigInt(coeff)};
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) term *= powers[i][exps[i]];
        total += term;
    }
    return total;
}

std::optional<std::pair<std::string, std::string>> MultiPoly::violating_transposition(
    const std::vector<std::string>& group) const {
    for (std::size_t g = 0; g + 1 < group.size(); ++g) {
        const std::string& u = group[g];
        const std::string& v = group[g + 1];
        if (u == v) continue;
        std::vector<std::string> target = vars_;
        target.push_back(u);
        target.push_back(v);
        MultiPoly ext = with_vars(std::move(target));
        std::size_t iu = static_cast<std::size_t>(
            std::find(ext.vars_.begin(), ext.vars_.end(), u) - ext.vars_.begin());
        std::size_t iv = static_cast<std::size_t>(
            std::find(ext.vars_.begin(), ext.vars_.end(), v) - ext.vars_.begin());
        TermMap swapped;
        for (const auto& [exps, coeff] : ext.terms_) {
            Exponents ne = exps;
            std::swap(ne[iu], ne[iv]);
            swapped.emplace(std::move(ne), coeff);
        }
        if (swapped != ext.terms_) return std::make_pair(u, v);
    }
    return std::nullopt;
}

bool MultiPoly::symmetric_under(const std::vector<std::string>& group) const {
    return !violating_transposition(group).has_value();
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const BigInt& c = it->second;
        std::string mono;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            const std::uint32_t e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += vars_[i];
            if (e > 1) mono += '^' + std::to_string(e);
        }
        const bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const BigInt mag = abs(c);
        if (mono.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += mono;
        }
    }
    return out;
}

ElemSymBasis::ElemSymBasis(std::size_t n) : arity(n) {
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back(name(i));
}

std::string ElemSymBasis::name(std::size_t i) { return "e" + std::to_string(i); }

MultiPoly elementary_symmetric(const std::vector<std::string>& vars, std::size_t k) {
    if (k == 0) return MultiPoly(1);
    if (k > vars.size()) return {};
    MultiPoly total;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        MultiPoly term(1);
        for (std::size_t i : idx) term *= MultiPoly::var(vars[i]);
        total += term;
        // next k-combination of {0..n-1}
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == vars.size() - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return total;
}

MultiPoly decompose_elementary(const MultiPoly& poly, const std::vector<std::string>& source_vars) {
    if (source_vars.empty()) throw std::invalid_argument("empty source variable list");
    std::vector<std::string> sorted = source_vars;
    std::sort(sorted.begin(), sorted.end(), var_less);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate source variable");
    for (const auto& v : poly.vars())
        if (!std::binary_search(sorted.begin(), sorted.end(), v, var_less))
            throw std::invalid_argument("variable '" + v + "' outside the decomposition basis");
    if (auto bad = poly.violating_transposition(sorted))
        throw NotSymmetricError(bad->first, bad->second);

    const std::size_t n = sorted.size();
    std::vector<MultiPoly> elem(n + 1);
    for (std::size_t i = 1; i <= n; ++i) elem[i] = elementary_symmetric(sorted, i);

    MultiPoly work = poly.with_vars(sorted);
    MultiPoly result;
    long guard = 0;
    while (!work.is_zero()) {
        if (++guard > 200000) throw std::logic_error("elementary decomposition did not terminate");
        const auto lead = work.terms().rbegin();  // lex-greatest term
        const MultiPoly::Exponents lambda = lead->first;
        const BigInt c = lead->second;
        MultiPoly e_term{BigInt(c)};
        MultiPoly reducer{BigInt(c)};
        for (std::size_t i = 0; i < n; ++i) {
            if (i + 1 < n && lambda[i] < lambda[i + 1])
                throw std::logic_error("dominant term not sorted; input not symmetric");
            const std::uint32_t mu = lambda[i] - (i + 1 < n ? lambda[i + 1] : 0);
            if (mu == 0) continue;
            e_term *= pow(MultiPoly::var(ElemSymBasis::name(i + 1)), mu);
            reducer *= pow(elem[i + 1], mu);
        }
        result += e_term;
        work -= reducer;
    }
    if (expand_elementary(result, sorted) != poly)
        throw std::logic_error("elementary decomposition failed back-substitution audit");
    return result;
}

MultiPoly expand_elementary(const MultiPoly& in_e_basis,
                            const std::vector<std::string>& source_vars) {
    std::map<std::string, MultiPoly> images;
    for (std::size_t i = 1; i <= source_vars.size(); ++i)
        images.emplace(ElemSymBasis::name(i), elementary_symmetric(source_vars, i));
    return in_e_basis.substitute(images);
}

}  // namespace tep
