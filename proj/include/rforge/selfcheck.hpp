// Seeded property suites over the algebra kernel. Reports carry no timing
// information, so a fixed seed yields byte-identical JSON across runs.

#pragma once

#include <string>
#include <vector>

#include "rforge/parse.hpp"
#include "rforge/prng.hpp"
#include "rforge/resultant.hpp"

#include <json.hpp>

namespace rforge {

// Random polynomial with up to max_terms monomials of per-variable degree
// at most max_deg.
inline Poly random_poly(Prng& rng, const VarTableRef& vars, unsigned max_deg,
                        unsigned max_terms) {
    Poly p(vars);
    unsigned terms = 1 + static_cast<unsigned>(rng.next_below(max_terms));
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m(vars->size());
        for (unsigned& e : m) e = static_cast<unsigned>(rng.next_below(max_deg + 1));
        p.add_term(m, rng.next_rational(9, 4));
    }
    return p;
}

inline Poly random_nonzero_poly(Prng& rng, const VarTableRef& vars, unsigned max_deg,
                                unsigned max_terms) {
    while (true) {
        Poly p = random_poly(rng, vars, max_deg, max_terms);
        if (!p.is_zero()) return p;
    }
}

// Random univariate polynomial of exact degree deg.
inline Poly random_monic_univariate(Prng& rng, const VarTableRef& vars, const std::string& var,
                                    unsigned deg) {
    Poly p = Poly::variable(vars, var, deg);
    for (unsigned e = 0; e < deg; ++e)
        p = p + Poly::variable(vars, var, e) * rng.next_rational(9, 3);
    return p;
}

namespace detail {

struct Suite {
    std::string name;
    unsigned trials = 0;
    unsigned passed = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what) {
        ++trials;
        if (ok)
            ++passed;
        else if (failures.size() < 10)
            failures.push_back(what);
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["name"] = name;
        j["trials"] = trials;
        j["passed"] = passed;
        j["failures"] = failures;
        return j;
    }
};

}  // namespace detail

inline nlohmann::json selfcheck(std::uint64_t seed, unsigned scale = 1) {
    std::vector<detail::Suite> suites;
    VarTableRef xy = make_vars({"x", "y"});
    VarTableRef xyz = make_vars({"x", "y", "z"});

    {
        detail::Suite s{"ring-axioms"};
        Prng rng(seed ^ 0x01);
        for (unsigned t = 0; t < 40 * scale; ++t) {
            Poly a = random_poly(rng, xyz, 3, 5);
            Poly b = random_poly(rng, xyz, 3, 5);
            Poly c = random_poly(rng, xyz, 3, 5);
            s.check(a + b == b + a, "addition commutes");
            s.check((a + b) + c == a + (b + c), "addition associates");
            s.check(a * b == b * a, "multiplication commutes");
            s.check((a * b) * c == a * (b * c), "multiplication associates");
            s.check(a * (b + c) == a * b + a * c, "multiplication distributes");
            s.check(a - a == Poly::zero(xyz), "additive inverse");
            s.check(a * Poly::constant(xyz, 1) == a, "multiplicative identity");
        }
        suites.push_back(std::move(s));
    }
    {
        detail::Suite s{"derivative"};
        Prng rng(seed ^ 0x02);
        for (unsigned t = 0; t < 40 * scale; ++t) {
            Poly a = random_poly(rng, xy, 4, 6);
            Poly b = random_poly(rng, xy, 4, 6);
            s.check(partial_derivative(a + b, "x") ==
                        partial_derivative(a, "x") + partial_derivative(b, "x"),
                    "derivative is additive");
            s.check(partial_derivative(a * b, "x") ==
                        partial_derivative(a, "x") * b + a * partial_derivative(b, "x"),
                    "Leibniz rule");
            s.check(partial_derivative(partial_derivative(a, "x"), "y") ==
                        partial_derivative(partial_derivative(a, "y"), "x"),
                    "mixed partials commute");
        }
        suites.push_back(std::move(s));
    }
    {
        detail::Suite s{"substitution-evaluation"};
        Prng rng(seed ^ 0x03);
        for (unsigned t = 0; t < 30 * scale; ++t) {
            Poly a = random_poly(rng, xy, 3, 5);
            Poly q = random_poly(rng, xy, 2, 3);
            std::map<std::string, Rational> sigma{{"x", rng.next_rational(9, 3)},
                                                  {"y", rng.next_rational(9, 3)}};
            std::map<std::string, Rational> sigma2 = sigma;
            sigma2["x"] = evaluate(q, sigma);
            s.check(evaluate(substitute(a, "x", q), sigma) == evaluate(a, sigma2),
                    "substitution commutes with evaluation");
            Poly b = random_nonzero_poly(rng, xy, 3, 5);
            Poly c = random_nonzero_poly(rng, xy, 3, 5);
            s.check(b.total_deg() + c.total_deg() == (b * c).total_deg(),
                    "total degree is additive over products");
        }
        suites.push_back(std::move(s));
    }
    {
        detail::Suite s{"parser-roundtrip"};
        Prng rng(seed ^ 0x04);
        for (unsigned t = 0; t < 60 * scale; ++t) {
            Poly a = random_poly(rng, xyz, 4, 8);
            std::string text = format(a);
            s.check(parse_polynomial(text, xyz) == a, "parse inverts format: " + text);
            s.check(format(parse_polynomial(text, xyz)) == text, "format idempotent: " + text);
        }
        suites.push_back(std::move(s));
    }
    {
        detail::Suite s{"determinant-crosscheck"};
        Prng rng(seed ^ 0x05);
        for (unsigned t = 0; t < 10 * scale; ++t) {
            PolyMatrix m(4, 4, xy);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) m.set(i, j, random_poly(rng, xy, 2, 3));
            s.check(det_minor_expansion(m) == det_bareiss(m), "minor equals bareiss");
        }
        VarTableRef tv = make_vars({"t"});
        for (unsigned t = 0; t < 5 * scale; ++t) {
            PolyMatrix m(4, 4, tv);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) m.set(i, j, random_poly(rng, tv, 3, 3));
            s.check(det_interpolated(m, "t") == det_bareiss(m),
                    "interpolation equals bareiss");
        }
        suites.push_back(std::move(s));
    }
    {
        detail::Suite s{"resultant"};
        Prng rng(seed ^ 0x06);
        VarTableRef xv = make_vars({"x"});
        for (unsigned t = 0; t < 20 * scale; ++t) {
            unsigned dm = 1 + static_cast<unsigned>(rng.next_below(3));
            unsigned dn = 1 + static_cast<unsigned>(rng.next_below(3));
            Poly f = random_monic_univariate(rng, xv, "x", dm);
            Poly g = random_monic_univariate(rng, xv, "x", dn);
            Poly rfg = resultant(f, g, "x");
            Poly rgf = resultant(g, f, "x");
            Poly sign = Poly::constant(xv, (dm * dn) % 2 == 0 ? 1 : -1);
            s.check(rfg == sign * rgf, "swap symmetry sign");
            Poly h = random_monic_univariate(rng, xv, "x", 2);
            s.check(resultant(f * h, g, "x") == resultant(f, g, "x") * resultant(h, g, "x"),
                    "multiplicative in the first argument");
            Poly common = random_monic_univariate(rng, xv, "x", 1);
            s.check(resultant(f * common, g * common, "x").is_zero(),
                    "planted common factor gives zero");
            bool coprime = univariate_gcd(f, g, "x").degree_in("x") == 0;
            s.check(rfg.is_zero() != coprime, "zero resultant iff shared factor");
        }
        suites.push_back(std::move(s));
    }
    {
        detail::Suite s{"nullspace"};
        Prng rng(seed ^ 0x07);
        for (unsigned t = 0; t < 20 * scale; ++t) {
            std::size_t rows = 2 + rng.next_below(4), cols = 2 + rng.next_below(4);
            RatMatrix m(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.next_rational(6, 3);
            std::size_t rk = rank(m);
            auto basis = nullspace(m);
            s.check(rk + basis.size() == cols, "rank-nullity");
            bool residual_zero = true;
            for (const auto& v : basis)
                for (std::size_t i = 0; i < rows; ++i) {
                    Rational dot = 0;
                    for (std::size_t j = 0; j < cols; ++j) dot += m.at(i, j) * v[j];
                    residual_zero = residual_zero && dot == 0;
                }
            s.check(residual_zero, "nullspace vectors annihilate the matrix");
        }
        suites.push_back(std::move(s));
    }

    nlohmann::json j;
    j["seed"] = seed;
    j["suites"] = nlohmann::json::array();
    bool ok = true;
    for (const auto& s : suites) {
        ok = ok && s.passed == s.trials;
        j["suites"].push_back(s.to_json());
    }
    j["verdict"] = ok ? "PASS" : "FAIL";
    return j;
}

}  // namespace rforge
