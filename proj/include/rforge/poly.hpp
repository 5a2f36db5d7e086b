// Sparse multivariate polynomials over the exact rationals.
//
// A Poly is a canonical sparse term map: monomial exponent vector -> nonzero
// rational coefficient, ordered graded-lexicographically over a fixed
// VarTable. All operations are pure; values are immutable after construction
// and safe to share across threads.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "rforge/rational.hpp"

namespace rforge {

// Ordered list of distinct variable names, fixed at construction.
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw UsageError("duplicate variable name '" + names_[i] + "' in VarTable");
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // Index of a declared variable; throws on unknown names.
    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        throw UsageError("unknown variable '" + name + "'");
    }

    bool has(const std::string& name) const {
        return std::find(names_.begin(), names_.end(), name) != names_.end();
    }

    bool operator==(const VarTable& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using VarTableRef = std::shared_ptr<const VarTable>;

inline VarTableRef make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

inline bool same_table(const VarTableRef& a, const VarTableRef& b) {
    return a == b || (a && b && *a == *b);
}

// Exponent vector indexed by VarTable position.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

// Graded lexicographic order: total degree first, then lex on exponents.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLex>;

    explicit Poly(VarTableRef vars) : vars_(std::move(vars)) {
        if (!vars_) throw UsageError("Poly requires a VarTable");
    }

    static Poly zero(const VarTableRef& vars) { return Poly(vars); }

    static Poly constant(const VarTableRef& vars, const Rational& c) {
        Poly p(vars);
        if (c != 0) p.terms_.emplace(Monomial(vars->size(), 0), c);
        return p;
    }

    static Poly variable(const VarTableRef& vars, const std::string& name, unsigned power = 1) {
        Poly p(vars);
        Monomial m(vars->size(), 0);
        m[vars->index_of(name)] = power;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static Poly from_terms(VarTableRef vars, TermMap terms) {
        Poly p(std::move(vars));
        for (auto& [mono, coef] : terms)
            if (coef != 0) p.terms_.emplace(mono, coef);
        return p;
    }

    const VarTableRef& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    // Constant term (zero if absent).
    Rational constant_value() const {
        Monomial unit(vars_->size(), 0);
        auto it = terms_.find(unit);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Leading term in graded-lex order; polynomial must be nonzero.
    const std::pair<const Monomial, Rational>& leading_term() const {
        if (terms_.empty()) throw UsageError("leading_term of zero polynomial");
        return *terms_.rbegin();
    }

    unsigned degree_in(std::size_t var_index) const {
        unsigned d = 0;
        for (const auto& [mono, coef] : terms_) d = std::max(d, mono[var_index]);
        return d;
    }
    unsigned degree_in(const std::string& name) const { return degree_in(vars_->index_of(name)); }

    // -1 convention avoided: total degree of the zero polynomial is reported as 0.
    unsigned total_deg() const {
        unsigned d = 0;
        for (const auto& [mono, coef] : terms_) d = std::max(d, total_degree(mono));
        return d;
    }

    // Indices of variables with a nonzero exponent somewhere.
    std::vector<std::size_t> used_vars() const {
        std::vector<bool> used(vars_->size(), false);
        for (const auto& [mono, coef] : terms_)
            for (std::size_t i = 0; i < mono.size(); ++i)
                if (mono[i] > 0) used[i] = true;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < used.size(); ++i)
            if (used[i]) out.push_back(i);
        return out;
    }

    bool operator==(const Poly& other) const {
        return same_table(vars_, other.vars_) && terms_ == other.terms_;
    }
    bool operator!=(const Poly& other) const { return !(*this == other); }

    void add_term(const Monomial& mono, const Rational& coef) {
        if (coef == 0) return;
        auto [it, inserted] = terms_.emplace(mono, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    VarTableRef vars_;
    TermMap terms_;
};

inline void require_same_table(const Poly& p, const Poly& q) {
    if (!same_table(p.vars(), q.vars()))
        throw UsageError("operation on polynomials over different VarTables");
}

inline Poly operator+(const Poly& p, const Poly& q) {
    require_same_table(p, q);
    Poly out = p;
    for (const auto& [mono, coef] : q.terms()) out.add_term(mono, coef);
    return out;
}

inline Poly operator-(const Poly& p) {
    Poly::TermMap terms;
    for (const auto& [mono, coef] : p.terms()) terms.emplace(mono, -coef);
    return Poly::from_terms(p.vars(), std::move(terms));
}

inline Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

inline Poly operator*(const Poly& p, const Poly& q) {
    require_same_table(p, q);
    Poly out(p.vars());
    Monomial prod(p.vars()->size());
    for (const auto& [mp, cp] : p.terms()) {
        for (const auto& [mq, cq] : q.terms()) {
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = mp[i] + mq[i];
            out.add_term(prod, cp * cq);
        }
    }
    return out;
}

inline Poly operator*(const Poly& p, const Rational& c) {
    Poly::TermMap terms;
    if (c != 0)
        for (const auto& [mono, coef] : p.terms()) terms.emplace(mono, coef * c);
    return Poly::from_terms(p.vars(), std::move(terms));
}
inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

inline Poly operator/(const Poly& p, const Rational& c) {
    if (c == 0) throw UsageError("division of polynomial by zero rational");
    return p * (Rational(1) / c);
}

inline Poly pow(const Poly& p, unsigned e) {
    Poly out = Poly::constant(p.vars(), 1);
    Poly base = p;
    while (e > 0) {
        if (e & 1u) out = out * base;
        base = (e >>= 1) ? base * base : base;
    }
    return out;
}

inline Poly partial_derivative(const Poly& p, const std::string& var) {
    std::size_t v = p.vars()->index_of(var);
    Poly out(p.vars());
    for (const auto& [mono, coef] : p.terms()) {
        if (mono[v] == 0) continue;
        Monomial m = mono;
        unsigned e = m[v]--;
        out.add_term(m, coef * e);
    }
    return out;
}

// Coefficients of p viewed as a univariate polynomial in `var`:
// result[i] is the coefficient of var^i, free of var. result.size() = deg+1
// (a single zero entry for p = 0).
inline std::vector<Poly> univariate_view(const Poly& p, const std::string& var) {
    std::size_t v = p.vars()->index_of(var);
    std::vector<Poly> coeffs(p.degree_in(v) + 1, Poly::zero(p.vars()));
    for (const auto& [mono, coef] : p.terms()) {
        Monomial m = mono;
        unsigned e = m[v];
        m[v] = 0;
        coeffs[e].add_term(m, coef);
    }
    return coeffs;
}

inline Poly substitute(const Poly& p, const std::string& var, const Poly& q) {
    require_same_table(p, q);
    std::vector<Poly> coeffs = univariate_view(p, var);
    // Horner evaluation in the polynomial ring.
    Poly out = Poly::zero(p.vars());
    for (std::size_t i = coeffs.size(); i-- > 0;) out = out * q + coeffs[i];
    return out;
}

inline Poly substitute(const Poly& p, const std::string& var, const Rational& value) {
    return substitute(p, var, Poly::constant(p.vars(), value));
}

// Full evaluation; the assignment must cover every variable occurring in p.
inline Rational evaluate(const Poly& p, const std::map<std::string, Rational>& assignment) {
    std::vector<bool> assigned(p.vars()->size(), false);
    std::vector<Rational> value(p.vars()->size());
    for (const auto& [name, val] : assignment) {
        std::size_t i = p.vars()->index_of(name);
        assigned[i] = true;
        value[i] = val;
    }
    for (std::size_t i : p.used_vars())
        if (!assigned[i])
            throw UsageError("evaluate: no value for variable '" + p.vars()->name(i) + "'");
    Rational sum = 0;
    for (const auto& [mono, coef] : p.terms()) {
        Rational term = coef;
        for (std::size_t i = 0; i < mono.size(); ++i)
            for (unsigned e = 0; e < mono[i]; ++e) term *= value[i];
        sum += term;
    }
    return sum;
}

// gcd of the integer-scaled coefficients divided by the lcm of denominators:
// the rational content. content(p) > 0 for p != 0; p / content(p) has
// coprime integer coefficients.
inline Rational content(const Poly& p) {
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& [mono, coef] : p.terms()) {
        num_gcd = gcd(num_gcd, numerator(coef));
        den_lcm = lcm(den_lcm, denominator(coef));
    }
    if (num_gcd == 0) return Rational(1);
    return Rational(abs(num_gcd), den_lcm);
}

// p divided by its content, sign-normalized so the graded-lex leading
// coefficient is positive. Used for proportionality-insensitive reporting.
inline Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    Poly out = p / content(p);
    if (out.leading_term().second < 0) out = -out;
    return out;
}

// Reports whether q = c * p for a nonzero rational c; returns c via out-param.
inline bool proportional(const Poly& p, const Poly& q, Rational& factor) {
    if (p.is_zero() || q.is_zero()) {
        factor = 0;
        return p.is_zero() && q.is_zero();
    }
    if (p.leading_term().first != q.leading_term().first) return false;
    factor = q.leading_term().second / p.leading_term().second;
    return p * factor == q;
}

}  // namespace rforge
