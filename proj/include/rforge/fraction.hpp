// Formal polynomial fractions. Never reduced: equality is cross-multiplication
// only, which is all the Lemma-style identity checks need.

#pragma once

#include "rforge/poly.hpp"

namespace rforge {

struct PolyFraction {
    Poly num;
    Poly den;

    PolyFraction(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
        require_same_table(num, den);
        if (den.is_zero()) throw UsageError("PolyFraction with zero denominator");
    }

    static PolyFraction of(const Poly& p) { return {p, Poly::constant(p.vars(), 1)}; }
};

inline PolyFraction operator+(const PolyFraction& a, const PolyFraction& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

inline PolyFraction operator-(const PolyFraction& a, const PolyFraction& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}

inline PolyFraction operator*(const PolyFraction& a, const PolyFraction& b) {
    return {a.num * b.num, a.den * b.den};
}

inline bool frac_equal(const PolyFraction& a, const PolyFraction& b) {
    return a.num * b.den == b.num * a.den;
}

}  // namespace rforge
