// Exact dense linear algebra: determinants over the polynomial ring by two
// independent algorithms (memoized Laplace expansion and fraction-free
// Bareiss elimination), exact polynomial division, and rational
// reduced-row-echelon nullspaces.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <future>
#include <thread>
#include <unordered_map>
#include <vector>

#include "rforge/poly.hpp"

namespace rforge {

class DivisionNotExact : public std::runtime_error {
public:
    DivisionNotExact(std::string msg, Poly residual)
        : std::runtime_error(std::move(msg)), residual_(std::move(residual)) {}
    // Nonzero witness: p - q * candidate at the point the division stalled.
    const Poly& residual() const { return residual_; }

private:
    Poly residual_;
};

// Exact quotient p / q; q must divide p. Graded-lex leading-term reduction:
// if p = q * c then every reduction step strips the leading term of the
// remaining product, so the loop either reaches zero or finds a witness.
inline Poly exact_divide(const Poly& p, const Poly& q) {
    require_same_table(p, q);
    if (q.is_zero()) throw UsageError("exact_divide by zero polynomial");
    Poly quotient(p.vars());
    Poly rem = p;
    const auto& [qm, qc] = q.leading_term();
    Monomial diff(qm.size());
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        bool divisible = true;
        for (std::size_t i = 0; i < qm.size(); ++i) {
            if (rm[i] < qm[i]) {
                divisible = false;
                break;
            }
            diff[i] = rm[i] - qm[i];
        }
        if (!divisible)
            throw DivisionNotExact("exact_divide: remainder is nonzero", rem);
        Poly t(p.vars());
        t.add_term(diff, rc / qc);
        quotient = quotient + t;
        rem = rem - t * q;
    }
    return quotient;
}

class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, const VarTableRef& vars)
        : rows_(rows), cols_(cols), vars_(vars), entries_(rows * cols, Poly::zero(vars)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const VarTableRef& vars() const { return vars_; }

    Poly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, Poly p) {
        if (!same_table(p.vars(), vars_))
            throw UsageError("PolyMatrix entry over a different VarTable");
        entries_[r * cols_ + c] = std::move(p);
    }

private:
    std::size_t rows_, cols_;
    VarTableRef vars_;
    std::vector<Poly> entries_;
};

class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// RESULTANT_FORGE_THREADS: 0 or unset = auto, 1 = serial.
inline unsigned det_thread_count() {
    if (const char* env = std::getenv("RESULTANT_FORGE_THREADS")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace detail {

// Laplace expansion over rows [row..n) and the column subset `mask`,
// memoized on the column subset (the row index is implied by popcount).
inline Poly det_minor_rec(const PolyMatrix& m, std::size_t row, std::uint32_t mask,
                          std::unordered_map<std::uint32_t, Poly>& memo) {
    if (mask == 0) return Poly::constant(m.vars(), 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Poly sum = Poly::zero(m.vars());
    int sign = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!(mask & (1u << c))) continue;
        const Poly& entry = m.at(row, c);
        if (!entry.is_zero()) {
            Poly sub = det_minor_rec(m, row + 1, mask & ~(1u << c), memo);
            Poly term = entry * sub;
            sum = (sign > 0) ? sum + term : sum - term;
        }
        sign = -sign;
    }
    memo.emplace(mask, sum);
    return sum;
}

}  // namespace detail

// Laplace expansion with memoization; robust for small symbolic matrices.
// Size is capped (default 12): larger matrices belong to det_bareiss.
inline Poly det_minor_expansion(const PolyMatrix& m, std::size_t size_cap = 12) {
    if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
    if (m.rows() > size_cap)
        throw UsageError("det_minor_expansion: size exceeds cap; use det_bareiss");
    std::size_t n = m.rows();
    if (n == 0) return Poly::constant(m.vars(), 1);
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);

    unsigned threads = det_thread_count();
    if (threads > 1 && n >= 6) {
        // Top-level cofactors evaluated independently; combination order is
        // fixed, so the result does not depend on the degree of concurrency.
        std::vector<std::future<Poly>> tasks;
        for (std::size_t c = 0; c < n; ++c) {
            tasks.push_back(std::async(std::launch::async, [&m, c, full] {
                std::unordered_map<std::uint32_t, Poly> memo;
                return detail::det_minor_rec(m, 1, full & ~(1u << c), memo);
            }));
        }
        Poly sum = Poly::zero(m.vars());
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            Poly term = m.at(0, c) * tasks[c].get();
            sum = (sign > 0) ? sum + term : sum - term;
            sign = -sign;
        }
        return sum;
    }

    std::unordered_map<std::uint32_t, Poly> memo;
    return detail::det_minor_rec(m, 0, full, memo);
}

// Fraction-free Gaussian elimination (Bareiss). Every interior division is
// exact; a failure there is an implementation bug, not an input error.
inline Poly det_bareiss(PolyMatrix m) {
    if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Poly::constant(m.vars(), 1);
    int sign = 1;
    Poly prev_pivot = Poly::constant(m.vars(), 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Deterministic pivot: first row at or below k with a nonzero entry.
        std::size_t pivot_row = k;
        while (pivot_row < n && m.at(pivot_row, k).is_zero()) ++pivot_row;
        if (pivot_row == n) return Poly::zero(m.vars());
        if (pivot_row != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = exact_divide(num, prev_pivot);
            }
            m.at(i, k) = Poly::zero(m.vars());
        }
        prev_pivot = m.at(k, k);
    }
    Poly det = m.at(n - 1, n - 1);
    return sign > 0 ? det : -det;
}

// Exact rational determinant: rows scaled to integers, then fraction-free
// integer Bareiss. Deterministic pivoting.
inline Rational det_rat(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<BigInt> a(n * n);
    BigInt scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        BigInt row_lcm = 1;
        for (std::size_t c = 0; c < n; ++c) row_lcm = lcm(row_lcm, denominator(m.at(r, c)));
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& v = m.at(r, c);
            a[r * n + c] = numerator(v) * (row_lcm / denominator(v));
        }
        scale *= row_lcm;
    }
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p * n + k] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    BigInt det = a[n * n - 1];
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

// Determinant of a matrix whose entries are univariate in `var`, computed
// by evaluation at deterministic sample points followed by Newton
// interpolation. Exact, and far cheaper than symbolic Bareiss once the
// matrix is large: the heavy work is integer arithmetic per sample.
inline Poly det_interpolated(const PolyMatrix& m, const std::string& var) {
    if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Poly::constant(m.vars(), 1);
    std::size_t v = m.vars()->index_of(var);
    std::size_t degree_bound = 0;
    for (std::size_t r = 0; r < n; ++r) {
        unsigned row_deg = 0;
        for (std::size_t c = 0; c < n; ++c) {
            const Poly& e = m.at(r, c);
            for (std::size_t u : e.used_vars())
                if (u != v)
                    throw UsageError("det_interpolated: entry not univariate in '" + var + "'");
            row_deg = std::max(row_deg, e.degree_in(v));
        }
        degree_bound += row_deg;
    }
    // Sample nodes 0, 1, -1, 2, -2, ...
    std::vector<Rational> xs(degree_bound + 1);
    for (std::size_t i = 0; i <= degree_bound; ++i)
        xs[i] = (i % 2 == 1) ? Rational((i + 1) / 2) : -Rational(i / 2);

    auto value_at = [&](const Rational& x) {
        RatMatrix num(n, n);
        std::map<std::string, Rational> sigma{{var, x}};
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) num.at(r, c) = evaluate(m.at(r, c), sigma);
        return det_rat(num);
    };

    std::vector<Rational> ys(xs.size());
    unsigned threads = det_thread_count();
    if (threads > 1 && xs.size() > 8) {
        std::vector<std::future<void>> tasks;
        std::size_t chunk = (xs.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t lo = t * chunk, hi = std::min(xs.size(), lo + chunk);
            if (lo >= hi) break;
            tasks.push_back(std::async(std::launch::async, [&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) ys[i] = value_at(xs[i]);
            }));
        }
        for (auto& t : tasks) t.get();
    } else {
        for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = value_at(xs[i]);
    }

    // Newton divided differences, then expansion to the power basis.
    std::vector<Rational> coef = ys;
    for (std::size_t level = 1; level < coef.size(); ++level)
        for (std::size_t i = coef.size() - 1; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
    Poly result = Poly::zero(m.vars());
    Poly x = Poly::variable(m.vars(), var);
    for (std::size_t i = coef.size(); i-- > 0;) {
        Poly node = x - Poly::constant(m.vars(), xs[i]);
        result = (i + 1 < coef.size()) ? result * node : result;
        result = result + Poly::constant(m.vars(), coef[i]);
    }
    return result;
}

namespace detail {

// A single variable occurring across all entries, if there is one.
inline bool single_variable(const PolyMatrix& m, std::string& var) {
    std::vector<bool> used(m.vars()->size(), false);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (std::size_t u : m.at(r, c).used_vars()) used[u] = true;
    std::size_t count = 0, idx = 0;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i]) {
            ++count;
            idx = i;
        }
    if (count != 1) return false;
    var = m.vars()->name(idx);
    return true;
}

}  // namespace detail

// Heuristic dispatch per the configured policy; `algorithm`: "auto",
// "minor", "bareiss" or "interp".
inline Poly det(const PolyMatrix& m, const std::string& algorithm = "auto") {
    if (algorithm == "minor") return det_minor_expansion(m, 31);
    if (algorithm == "bareiss") return det_bareiss(m);
    if (algorithm == "interp") {
        std::string var;
        if (!detail::single_variable(m, var))
            throw UsageError("det interp requires entries univariate in one shared variable");
        return det_interpolated(m, var);
    }
    if (algorithm != "auto") throw UsageError("unknown determinant algorithm '" + algorithm + "'");
    if (m.rows() > 12) {
        std::string var;
        if (m.rows() > 16 && detail::single_variable(m, var)) return det_interpolated(m, var);
        return det_bareiss(m);
    }
    std::size_t terms = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) terms += m.at(r, c).term_count();
    if (terms > 600) return det_bareiss(m);
    return det_minor_expansion(m);
}

// Reduced row echelon form in place; returns pivot column per pivot row.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        // Leftmost nonzero, first row: deterministic.
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(p, c));
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of {v : m v = 0} in reduced echelon parameterization, one vector per
// free column, in column order.
inline std::vector<std::vector<Rational>> nullspace(RatMatrix m) {
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rank(RatMatrix m) { return rref(m).size(); }

}  // namespace rforge
