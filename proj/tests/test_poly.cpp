#include <catch_amalgamated.hpp>

#include "rforge/poly.hpp"

using namespace rforge;

TEST_CASE("terms merge and zero coefficients vanish") {
    VarTableRef v = make_vars({"x", "y"});
    Poly p(v);
    p.add_term({1, 0}, Rational(2));
    p.add_term({1, 0}, Rational(3));
    p.add_term({0, 2}, Rational(5));
    p.add_term({0, 2}, Rational(-5));
    REQUIRE(p.term_count() == 1);
    REQUIRE(p == Poly::variable(v, "x") * Poly::constant(v, 5));
}

TEST_CASE("arithmetic on fixed polynomials") {
    VarTableRef v = make_vars({"x", "y"});
    Poly x = Poly::variable(v, "x");
    Poly y = Poly::variable(v, "y");
    Poly one = Poly::constant(v, 1);

    REQUIRE((x + y) * (x - y) == x * x - y * y);
    REQUIRE(pow(x + one, 3) == x * x * x + 3 * x * x + 3 * x + one);
    REQUIRE((x - x).is_zero());
    REQUIRE(-(x - y) == y - x);
}

TEST_CASE("degree bookkeeping") {
    VarTableRef v = make_vars({"x", "y"});
    Poly p(v);
    p.add_term({3, 1}, Rational(1));
    p.add_term({0, 2}, Rational(-7));
    REQUIRE(p.degree_in("x") == 3);
    REQUIRE(p.degree_in("y") == 2);
    REQUIRE(p.total_deg() == 4);
    REQUIRE(Poly::zero(v).total_deg() == 0);
    REQUIRE(Poly::constant(v, 4).degree_in("x") == 0);
}

TEST_CASE("content and primitive part") {
    VarTableRef v = make_vars({"x", "y"});
    Poly x = Poly::variable(v, "x");
    Poly y = Poly::variable(v, "y");
    Poly p = Poly::constant(v, Rational(4, 3)) * x + Poly::constant(v, Rational(2, 3)) * y;
    Poly prim = primitive_part(p);
    REQUIRE(content(prim) == 1);
    Rational factor;
    REQUIRE(proportional(p, prim, factor));
    REQUIRE((prim * content(p) == p || prim * (-content(p)) == p));
    REQUIRE(proportional(prim, x * 2 + y, factor));
}

TEST_CASE("proportional detects constant multiples only") {
    VarTableRef v = make_vars({"x"});
    Poly x = Poly::variable(v, "x");
    Rational factor;
    Poly one = Poly::constant(v, 1);
    REQUIRE(proportional(3 * x + 6 * one, x + 2 * one, factor));
    REQUIRE(factor == Rational(1, 3));  // second = factor * first
    REQUIRE_FALSE(proportional(x + one, x + 2 * one, factor));
    REQUIRE_FALSE(proportional(x, Poly::zero(v), factor));
    REQUIRE(proportional(Poly::zero(v), Poly::zero(v), factor));
}

TEST_CASE("substitution and evaluation") {
    VarTableRef v = make_vars({"x", "y"});
    Poly x = Poly::variable(v, "x");
    Poly y = Poly::variable(v, "y");
    Poly p = x * x + y;
    Poly one = Poly::constant(v, 1);
    REQUIRE(substitute(p, "x", y + one) == y * y + 3 * y + one);
    std::map<std::string, Rational> sigma{{"x", Rational(1, 2)}, {"y", Rational(3)}};
    REQUIRE(evaluate(p, sigma) == Rational(13, 4));
}

TEST_CASE("partial derivatives") {
    VarTableRef v = make_vars({"x", "y"});
    Poly x = Poly::variable(v, "x");
    Poly y = Poly::variable(v, "y");
    REQUIRE(partial_derivative(x * x * y + y, "x") == 2 * x * y);
    REQUIRE(partial_derivative(x * x * y + y, "y") == x * x + Poly::constant(v, 1));
    REQUIRE(partial_derivative(Poly::constant(v, 9), "x").is_zero());
}

TEST_CASE("operations across variable tables are rejected") {
    VarTableRef a = make_vars({"x"});
    VarTableRef b = make_vars({"x", "y"});
    Poly pa = Poly::variable(a, "x");
    Poly pb = Poly::variable(b, "x");
    REQUIRE_THROWS_AS(pa + pb, UsageError);
    REQUIRE_THROWS_AS(pa * pb, UsageError);
}

TEST_CASE("univariate view splits by power") {
    VarTableRef v = make_vars({"x", "y"});
    Poly x = Poly::variable(v, "x");
    Poly y = Poly::variable(v, "y");
    std::vector<Poly> coeffs = univariate_view(x * x * y + 2 * x + y * y, "x");
    REQUIRE(coeffs.size() == 3);
    REQUIRE(coeffs[0] == y * y);
    REQUIRE(coeffs[1] == Poly::constant(v, 2));
    REQUIRE(coeffs[2] == y);
}
