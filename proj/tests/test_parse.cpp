#include <catch_amalgamated.hpp>

#include "rforge/parse.hpp"

using namespace rforge;

namespace {
const VarTableRef kVars = make_vars({"x", "y", "z"});
}

TEST_CASE("basic expressions parse to canonical polynomials") {
    Poly x = Poly::variable(kVars, "x");
    Poly y = Poly::variable(kVars, "y");
    REQUIRE(parse_polynomial("x^2 + 2*x*y - 3", kVars) ==
            x * x + 2 * x * y - Poly::constant(kVars, 3));
    REQUIRE(parse_polynomial("(x + y)^2", kVars) == x * x + 2 * x * y + y * y);
    REQUIRE(parse_polynomial("3/2 * x", kVars) == x * Rational(3, 2));
    REQUIRE(parse_polynomial("0", kVars).is_zero());
}

TEST_CASE("unary minus binds looser than exponentiation") {
    Poly x = Poly::variable(kVars, "x");
    REQUIRE(parse_polynomial("-x^2", kVars) == -(x * x));
    REQUIRE(parse_polynomial("-(x)^2", kVars) == -(x * x));
    REQUIRE(parse_polynomial("(-x)^2", kVars) == x * x);
}

TEST_CASE("rejected inputs carry line and column positions") {
    REQUIRE_THROWS_AS(parse_polynomial("2x", kVars), ParseError);   // implicit product
    REQUIRE_THROWS_AS(parse_polynomial("x^2^3", kVars), ParseError);  // chained power
    REQUIRE_THROWS_AS(parse_polynomial("x + ", kVars), ParseError);
    REQUIRE_THROWS_AS(parse_polynomial("w + 1", kVars), ParseError);  // undeclared name
    try {
        parse_polynomial("x +\n* y", kVars);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("2:1") != std::string::npos);
    }
}

TEST_CASE("format orders terms by graded lex, descending") {
    Poly p = parse_polynomial("y + x^2*y - 5 + x*y^2", kVars);
    REQUIRE(format(p) == "x^2*y + x*y^2 + y - 5");
    REQUIRE(format(Poly::zero(kVars)) == "0");
    REQUIRE(format(parse_polynomial("-1/2*x", kVars)) == "-1/2*x");
}

TEST_CASE("parse inverts format") {
    for (const char* text : {"x^3 - 2*x*y*z + 7/3", "z^5", "-x - y - z", "22/7"}) {
        Poly p = parse_polynomial(text, kVars);
        REQUIRE(parse_polynomial(format(p), kVars) == p);
        REQUIRE(format(parse_polynomial(format(p), kVars)) == format(p));
    }
}

TEST_CASE("polynomial sources declare their variables") {
    Poly p = parse_poly_source("vars: a b\na^2 - b\n");
    REQUIRE(p.vars()->names() == std::vector<std::string>{"a", "b"});
    REQUIRE(p.degree_in("a") == 2);
    REQUIRE_THROWS_AS(parse_poly_source("a^2 - b\n"), ParseError);  // missing header
}

TEST_CASE("json round-trip preserves exact coefficients") {
    Poly p = parse_polynomial("x^4 - 123456789/987654321*y + 1", kVars);
    nlohmann::json j = poly_to_json(p);
    Poly q = poly_from_json(j);
    REQUIRE(format(q) == format(p));
}
