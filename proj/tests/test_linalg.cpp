#include <catch_amalgamated.hpp>

#include "rforge/parse.hpp"
#include "rforge/univariate.hpp"

using namespace rforge;

namespace {

const VarTableRef kXY = make_vars({"x", "y"});

Poly P(const std::string& text) { return parse_polynomial(text, kXY); }

PolyMatrix matrix_of(const std::vector<std::vector<std::string>>& rows) {
    PolyMatrix m(rows.size(), rows[0].size(), kXY);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, P(rows[i][j]));
    return m;
}

}  // namespace

TEST_CASE("determinant algorithms agree on fixed matrices") {
    PolyMatrix m = matrix_of({{"x + 1", "y", "2"},
                              {"x*y", "x - y", "0"},
                              {"3", "1", "x^2"}});
    Poly d = det_minor_expansion(m);
    REQUIRE(d == det_bareiss(m));
    REQUIRE(d == det(m, "auto"));
    REQUIRE_FALSE(d.is_zero());
}

TEST_CASE("determinant of a singular matrix is zero") {
    PolyMatrix m = matrix_of({{"x", "y"}, {"2*x", "2*y"}});
    REQUIRE(det_bareiss(m).is_zero());
    REQUIRE(det_minor_expansion(m).is_zero());
}

TEST_CASE("rational determinant matches hand elimination") {
    RatMatrix m(3, 3);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = 3;
    m.at(0, 2) = Rational(-2, 7);
    m.at(1, 0) = 0;
    m.at(1, 1) = Rational(5, 3);
    m.at(1, 2) = 1;
    m.at(2, 0) = 4;
    m.at(2, 1) = -1;
    m.at(2, 2) = Rational(1, 4);
    // Expansion along the first column: 1/2*(5/12 + 1) - 0 + 4*(3 + 10/21).
    REQUIRE(det_rat(m) == Rational(1, 2) * Rational(17, 12) + 4 * Rational(73, 21));
}

TEST_CASE("interpolated determinant matches bareiss on univariate matrices") {
    VarTableRef tv = make_vars({"t"});
    PolyMatrix m(3, 3, tv);
    const char* entries[3][3] = {{"t^2 + 1", "t", "3"},
                                 {"2*t", "t - 1", "t^3"},
                                 {"0", "5", "t + 2"}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.set(i, j, parse_polynomial(entries[i][j], tv));
    REQUIRE(det_interpolated(m, "t") == det_bareiss(m));
    REQUIRE(det(m, "interp") == det_bareiss(m));
}

TEST_CASE("exact division succeeds exactly when the quotient is polynomial") {
    Poly a = P("x^2 - y^2");
    REQUIRE(exact_divide(a, P("x - y")) == P("x + y"));
    REQUIRE_THROWS_AS(exact_divide(a, P("x + 1")), DivisionNotExact);
    REQUIRE_THROWS_AS(exact_divide(a, P("0")), UsageError);
}

TEST_CASE("rank and nullspace on a fixed rational matrix") {
    RatMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = 3;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = 6;
    REQUIRE(rank(m) == 1);
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) REQUIRE(v[0] + 2 * v[1] + 3 * v[2] == 0);
}

TEST_CASE("gcd in a variable recovers a planted factor") {
    Poly common = P("x - y");
    Poly p = common * common * P("x + 1");
    Poly q = common * P("x + 3");
    Poly g = gcd_in_variable(p, q, "x");
    Rational factor;
    REQUIRE(proportional(g, common, factor));
    // Coprime inputs give the unit gcd.
    REQUIRE(gcd_in_variable(P("x + 1"), P("x + 2"), "x") == Poly::constant(kXY, 1));
}

TEST_CASE("squarefree part drops multiplicities only") {
    Poly p = P("(x - 1)^2 * (x + 2)");
    Rational factor;
    REQUIRE(proportional(squarefree_part_in(p, "x"), P("(x - 1)*(x + 2)"), factor));
    // Two-variable input, squarefree in x already.
    Poly q = P("(x - y)*(x + y)");
    REQUIRE(proportional(squarefree_part_in(q, "x"), q, factor));
    // Repeated two-variable factor.
    Poly r = P("(x - y)^3");
    REQUIRE(proportional(squarefree_part_in(r, "x"), P("x - y"), factor));
}
