#include <catch_amalgamated.hpp>

#include "rforge/parse.hpp"
#include "rforge/resultant.hpp"

using namespace rforge;

namespace {

const VarTableRef kXY = make_vars({"x", "y"});

Poly P(const std::string& text) { return parse_polynomial(text, kXY); }

}  // namespace

TEST_CASE("sylvester matrix layout") {
    Poly f = P("x^2 + 3*x + 2");
    Poly g = P("x - 5");
    PolyMatrix s = sylvester(f, g, "x");
    REQUIRE(s.rows() == 3);
    // One f-row (descending coefficients), then two shifted g-rows.
    REQUIRE(s.at(0, 0) == P("1"));
    REQUIRE(s.at(0, 1) == P("3"));
    REQUIRE(s.at(0, 2) == P("2"));
    REQUIRE(s.at(1, 0) == P("1"));
    REQUIRE(s.at(1, 1) == P("-5"));
    REQUIRE(s.at(1, 2) == P("0"));
    REQUIRE(s.at(2, 0) == P("0"));
    REQUIRE(s.at(2, 1) == P("1"));
    REQUIRE(s.at(2, 2) == P("-5"));
}

TEST_CASE("hand-checked resultants") {
    REQUIRE(resultant(P("x - 1"), P("x + 1"), "x") == P("2"));
    REQUIRE(resultant(P("x^2 + 1"), P("x - 1"), "x") == P("2"));
    // Shared root at x = 1.
    REQUIRE(resultant(P("x^2 - 1"), P("x - 1"), "x").is_zero());
    // Eliminating y from a multivariate pair.
    REQUIRE(resultant(P("y^2 + x^2"), P("x - y"), "x") == P("2*y^2"));
}

TEST_CASE("resultant of a polynomial with itself vanishes") {
    Poly f = P("x^3 - 2*x*y + y^2 + 4");
    REQUIRE(resultant(f, f, "x").is_zero());
}

TEST_CASE("swap symmetry picks up the parity sign") {
    Poly f = P("x^2 + y");     // degree 2
    Poly g = P("x^3 + x + 1");  // degree 3
    REQUIRE(resultant(f, g, "x") == resultant(g, f, "x"));  // 2*3 even
    Poly h = P("x + y");  // degree 1: 2*1 even, 3*1 odd
    REQUIRE(resultant(g, h, "x") == -resultant(h, g, "x"));
}

TEST_CASE("degree collapse convention") {
    ResultantResult r = resultant_ex(P("x^3 + x"), P("7"), "x");
    REQUIRE(r.degree_collapsed);
    REQUIRE(r.value == P("343"));
    ResultantResult s = resultant_ex(P("y + 2"), P("x^2"), "x");
    REQUIRE(s.degree_collapsed);
    REQUIRE(s.value == P("(y + 2)^2"));
}

TEST_CASE("degenerate inputs are rejected") {
    REQUIRE_THROWS_AS(resultant(P("0"), P("x"), "x"), DegenerateInput);
    REQUIRE_THROWS_AS(resultant(P("3"), P("5"), "x"), DegenerateInput);
    REQUIRE_THROWS_AS(sylvester(P("y"), P("y + 1"), "x"), DegenerateInput);
}

TEST_CASE("determinant algorithms agree on a sylvester matrix") {
    Poly f = P("x^3 + y*x + 2");
    Poly g = P("y*x^2 - x + y^2");
    PolyMatrix s = sylvester(f, g, "x");
    REQUIRE(det_minor_expansion(s) == det_bareiss(s));
    REQUIRE(resultant(f, g, "x", "minor") == resultant(f, g, "x", "bareiss"));
}

TEST_CASE("gcd oracle agrees with the resultant verdict") {
    Poly common = P("x - y");
    Poly f = common * P("x + 2");
    Poly g = common * P("x - 3");
    REQUIRE(resultant(f, g, "x").is_zero());
    OracleReport shared = common_factor_oracle(f, g, "x", 20, 7);
    REQUIRE(shared.verdict == FactorVerdict::SharedRoot);
    REQUIRE(shared.separate == 0);

    Poly h = P("x + y + 1");
    REQUIRE_FALSE(resultant(f, h, "x").is_zero());
    OracleReport separate = common_factor_oracle(f, h, "x", 20, 7);
    REQUIRE(separate.verdict == FactorVerdict::NoSharedRoot);
}
