// Sylvester matrices and resultants, plus the independent gcd-based oracle
// used to cross-validate "resultant = 0" verdicts.

#pragma once

#include <optional>
#include <string>

#include "rforge/linalg.hpp"
#include "rforge/prng.hpp"
#include "rforge/univariate.hpp"

namespace rforge {

class DegenerateInput : public std::runtime_error {
public:
    explicit DegenerateInput(const std::string& msg) : std::runtime_error(msg) {}
};

class PreconditionViolated : public std::runtime_error {
public:
    explicit PreconditionViolated(const std::string& msg) : std::runtime_error(msg) {}
};

// The (m+n) x (m+n) Sylvester matrix of f (degree m) and g (degree n) in
// `var`: n shifted rows of f-coefficients in descending-power order, then m
// shifted rows of g-coefficients. Entries are free of `var`.
inline PolyMatrix sylvester(const Poly& f, const Poly& g, const std::string& var) {
    require_same_table(f, g);
    if (f.is_zero() || g.is_zero())
        throw DegenerateInput("sylvester: zero polynomial input");
    std::vector<Poly> fc = univariate_view(f, var);  // index = power
    std::vector<Poly> gc = univariate_view(g, var);
    std::size_t m = fc.size() - 1, n = gc.size() - 1;
    if (m == 0 && n == 0)
        throw DegenerateInput("sylvester: both polynomials constant in '" + var + "'");
    if (fc[m].is_zero() && gc[n].is_zero())
        throw PreconditionViolated("sylvester: both leading coefficients vanish");
    PolyMatrix s(m + n, m + n, f.vars());
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k) s.set(row, row + k, fc[m - k]);
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k) s.set(n + row, row + k, gc[n - k]);
    return s;
}

struct ResultantResult {
    Poly value;
    // Set when a degree-zero side forced the convention Res = const^{deg other}
    // instead of a genuine Sylvester determinant.
    bool degree_collapsed = false;
};

inline ResultantResult resultant_ex(const Poly& f, const Poly& g, const std::string& var,
                                    const std::string& det_algorithm = "auto") {
    require_same_table(f, g);
    if (f.is_zero() || g.is_zero())
        throw DegenerateInput("resultant: zero polynomial input");
    unsigned m = f.degree_in(var), n = g.degree_in(var);
    if (m == 0 && n == 0)
        throw DegenerateInput("resultant: both polynomials constant in '" + var + "'");
    // Degree collapse convention: Res(f, c) = c^{deg f} for constant c != 0.
    if (n == 0) return {pow(g, m), true};
    if (m == 0) return {pow(f, n), true};
    return {det(sylvester(f, g, var), det_algorithm), false};
}

inline Poly resultant(const Poly& f, const Poly& g, const std::string& var,
                      const std::string& det_algorithm = "auto") {
    return resultant_ex(f, g, var, det_algorithm).value;
}

enum class FactorVerdict { SharedRoot, NoSharedRoot, Inconclusive };

struct OracleReport {
    FactorVerdict verdict = FactorVerdict::Inconclusive;
    unsigned shared = 0;        // trials where gcd degree >= 1
    unsigned separate = 0;      // trials where gcd degree == 0
    unsigned discarded = 0;     // leading coefficient vanished under specialization
};

// Specializes all variables except `var` at random rationals (discarding
// trials that kill a leading coefficient, where resultant specialization is
// invalid) and runs the Euclidean gcd. Independent of the determinant path.
inline OracleReport common_factor_oracle(const Poly& f, const Poly& g, const std::string& var,
                                         unsigned trials, std::uint64_t seed) {
    require_same_table(f, g);
    if (f.is_zero() || g.is_zero()) throw UsageError("common_factor_oracle: zero input");
    Prng rng(seed);
    std::vector<Poly> fc = univariate_view(f, var);
    std::vector<Poly> gc = univariate_view(g, var);
    const Poly& f_lead = fc.back();
    const Poly& g_lead = gc.back();
    OracleReport report;
    for (unsigned t = 0; t < trials; ++t) {
        std::map<std::string, Rational> sigma;
        for (const std::string& name : f.vars()->names())
            if (name != var) sigma[name] = rng.next_rational(20, 5);
        if (evaluate(f_lead, sigma) == 0 || evaluate(g_lead, sigma) == 0) {
            ++report.discarded;
            continue;
        }
        UniPoly uf = specialize_to_univariate(f, var, sigma);
        UniPoly ug = specialize_to_univariate(g, var, sigma);
        if (uni_degree(uni_gcd(uf, ug)) >= 1)
            ++report.shared;
        else
            ++report.separate;
    }
    if (report.shared > 0 && report.separate == 0)
        report.verdict = FactorVerdict::SharedRoot;
    else if (report.separate > 0)
        report.verdict = FactorVerdict::NoSharedRoot;
    return report;
}

}  // namespace rforge
