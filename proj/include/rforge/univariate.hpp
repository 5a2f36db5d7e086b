// Dense univariate helpers over the rationals: Euclidean gcd and evaluation.
// These back the gcd-based oracle that cross-checks the resultant kernel,
// so they deliberately share no code with the Sylvester path.

#pragma once

#include <vector>

#include "rforge/linalg.hpp"
#include "rforge/poly.hpp"

namespace rforge {

// Coefficient vector, index = power. Canonical form drops trailing zeros;
// the zero polynomial is the empty vector.
using UniPoly = std::vector<Rational>;

inline void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UniPoly uni_monic(UniPoly p) {
    uni_trim(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    for (Rational& c : p) c /= lead;
    return p;
}

// Remainder of a by b (b nonzero), long division over the field.
inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    uni_trim(a);
    while (uni_degree(a) >= uni_degree(b)) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        uni_trim(a);
    }
    return a;
}

// Monic Euclidean gcd; gcd(0, 0) is an error.
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    if (a.empty() && b.empty()) throw UsageError("gcd of two zero polynomials");
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(std::move(a));
}

inline Rational uni_eval(const UniPoly& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// Extracts p as a dense univariate in `var`; every other variable occurring
// in p must be covered by the assignment.
inline UniPoly specialize_to_univariate(const Poly& p, const std::string& var,
                                        const std::map<std::string, Rational>& assignment) {
    std::vector<Poly> coeffs = univariate_view(p, var);
    UniPoly out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = evaluate(coeffs[i], assignment);
    uni_trim(out);
    return out;
}

// univariate_gcd of the spec: both inputs must be effectively univariate in
// `var` (all other variables already specialized away). Returns the monic gcd
// as a Poly over the inputs' table.
inline Poly univariate_gcd(const Poly& p, const Poly& q, const std::string& var) {
    require_same_table(p, q);
    auto to_uni = [&](const Poly& f) {
        UniPoly u;
        for (const Poly& c : univariate_view(f, var)) {
            if (!c.is_constant())
                throw UsageError("univariate_gcd: input not univariate in '" + var + "'");
            u.push_back(c.constant_value());
        }
        uni_trim(u);
        return u;
    };
    UniPoly g = uni_gcd(to_uni(p), to_uni(q));
    Poly out = Poly::zero(p.vars());
    Poly x = Poly::variable(p.vars(), var);
    for (std::size_t i = g.size(); i-- > 0;) out = out * x + Poly::constant(p.vars(), g[i]);
    return out;
}

namespace detail {

// The single variable other than `var` used by p, if any.
inline bool other_variable(const Poly& p, const std::string& var, std::string& other) {
    std::size_t v = p.vars()->index_of(var);
    bool found = false;
    for (std::size_t u : p.used_vars()) {
        if (u == v) continue;
        if (found && p.vars()->name(u) != other)
            throw UsageError("expected a polynomial in at most two variables");
        other = p.vars()->name(u);
        found = true;
    }
    return found;
}

inline UniPoly poly_as_uni(const Poly& p, const std::string& var) {
    UniPoly u;
    for (const Poly& c : univariate_view(p, var)) {
        if (!c.is_constant()) throw UsageError("coefficient not univariate");
        u.push_back(c.constant_value());
    }
    uni_trim(u);
    return u;
}

inline Poly uni_as_poly(const UniPoly& u, const VarTableRef& vars, const std::string& var) {
    Poly out = Poly::zero(vars);
    Poly x = Poly::variable(vars, var);
    for (std::size_t i = u.size(); i-- > 0;) out = out * x + Poly::constant(vars, u[i]);
    return out;
}

// p with both the rational content and the polynomial content of its
// var-coefficients removed (coefficients must involve at most one other
// variable). Gauss-primitive representative for the pseudo-remainder chain.
inline Poly strip_coefficient_content(const Poly& p, const std::string& var) {
    if (p.is_zero()) return p;
    std::string other;
    if (!other_variable(p, var, other)) return primitive_part(p);
    UniPoly g;
    for (const Poly& c : univariate_view(p, var)) {
        if (c.is_zero()) continue;
        UniPoly u = poly_as_uni(c, other);
        g = g.empty() ? uni_monic(std::move(u)) : uni_gcd(std::move(g), u);
    }
    return primitive_part(exact_divide(p, uni_as_poly(g, p.vars(), other)));
}

// Pseudo-remainder of a by b in `var` (coefficients in the remaining vars).
inline Poly pseudo_rem(const Poly& a, const Poly& b, const std::string& var) {
    unsigned db = b.degree_in(var);
    Poly lcb = univariate_view(b, var).back();
    Poly r = a;
    while (!r.is_zero()) {
        unsigned dr = r.degree_in(var);
        if (dr < db || (dr == 0 && db == 0)) break;
        Poly lcr = univariate_view(r, var).back();
        r = r * lcb - lcr * Poly::variable(r.vars(), var, dr - db) * b;
    }
    return r;
}

}  // namespace detail

// gcd of p and q as univariate polynomials in `var` over the fraction field
// of the remaining coefficients (at most one other variable may occur).
// Returned Gauss-primitive; constant gcds come back as 1. Primitive
// pseudo-remainder sequence.
inline Poly gcd_in_variable(Poly p, Poly q, const std::string& var) {
    require_same_table(p, q);
    if (p.is_zero() && q.is_zero()) throw UsageError("gcd of two zero polynomials");
    if (p.is_zero()) return detail::strip_coefficient_content(q, var);
    if (q.is_zero()) return detail::strip_coefficient_content(p, var);
    Poly a = detail::strip_coefficient_content(p, var);
    Poly b = detail::strip_coefficient_content(q, var);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (true) {
        if (b.degree_in(var) == 0) return Poly::constant(a.vars(), 1);
        Poly r = detail::pseudo_rem(a, b, var);
        if (r.is_zero()) return b;
        a = std::move(b);
        b = detail::strip_coefficient_content(r, var);
    }
}

// p divided by gcd(p, dp/dvar): same roots in `var`, all multiplicities
// reduced to one. Gauss-primitive output.
inline Poly squarefree_part_in(const Poly& p, const std::string& var) {
    if (p.is_zero()) return p;
    Poly d = partial_derivative(p, var);
    if (d.is_zero()) return primitive_part(p);
    Poly pp = detail::strip_coefficient_content(p, var);
    Poly g = gcd_in_variable(pp, d, var);
    if (g.degree_in(var) == 0) return pp;
    return primitive_part(exact_divide(pp, g));
}

}  // namespace rforge
