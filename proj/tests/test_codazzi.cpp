#include <catch_amalgamated.hpp>

#include "rforge/codazzi.hpp"

using namespace rforge;

namespace {

FrameConfig distinct6() {
    return FrameConfig(6, {Rational(2), Rational(3), Rational(5)}, 1, 1);
}

}  // namespace

TEST_CASE("frame configuration validation") {
    REQUIRE_THROWS_AS(FrameConfig(3, {}, 1, 1), UsageError);
    REQUIRE_THROWS_AS(FrameConfig(6, {2, 3}, 1, 1), UsageError);       // wrong count
    REQUIRE_THROWS_AS(FrameConfig(6, {2, 3, 5}, 0, 1), UsageError);    // mu = 0
    REQUIRE_THROWS_AS(FrameConfig(6, {2, 3, 5}, 1, 0), UsageError);    // H = 0
    REQUIRE_THROWS_AS(FrameConfig(6, {2, 3, -3}, 1, 1), UsageError);   // hits -nH/2
    REQUIRE_NOTHROW(distinct6());
}

TEST_CASE("canonical unknowns fold the index swap into a sign") {
    using detail::canonical_term;
    REQUIRE_FALSE(canonical_term(1, 2, 2, 1, SignConvention::Uniform).has_value());
    auto t = canonical_term(4, 3, 2, Rational(5), SignConvention::Uniform);
    REQUIRE(t.has_value());
    REQUIRE(t->first == OmegaKey{4, 2, 3});
    REQUIRE(t->second == -5);
    // Lorentz convention keeps the sign when the swapped pair touches e_1.
    auto u = canonical_term(4, 3, 1, Rational(5), SignConvention::Lorentz);
    REQUIRE(u->first == OmegaKey{4, 1, 3});
    REQUIRE(u->second == 5);
    auto v = canonical_term(4, 3, 2, Rational(5), SignConvention::Lorentz);
    REQUIRE(v->second == -5);
}

TEST_CASE("distinct curvatures force the full expected vanishing set") {
    nlohmann::json j = vanishing_report(distinct6());
    REQUIRE(j["verdict"] == "PASS");
    REQUIRE(j.count("expected_but_not_forced") == 0);
    // Survivors are exactly the in-block coefficients outside the universe.
    for (const auto& name : j["survivors"]) {
        std::string s = name.get<std::string>();
        REQUIRE((s.substr(0, 4) == "w(1," || s.substr(0, 4) == "w(2,"));
    }
}

TEST_CASE("a repeated curvature pair leaves exactly the stated survivors") {
    FrameConfig config(6, {Rational(2), Rational(2), Rational(5)}, 1, 1);
    nlohmann::json j = vanishing_report(config);
    REQUIRE(j["verdict"] == "PASS");
    std::set<std::string> expected(j["expected_survivors"].begin(),
                                   j["expected_survivors"].end());
    REQUIRE(expected == std::set<std::string>{"w(1,3,4)", "w(2,3,4)", "w(6,3,4)"});
}

TEST_CASE("signature-aware compatibility breaks the uniform vanishing argument") {
    FrameConfig config(6, {Rational(2), Rational(3), Rational(5)}, 1, 1, true,
                       SignConvention::Lorentz);
    nlohmann::json j = vanishing_report(config);
    REQUIRE(j["verdict"] == "FAIL");
    REQUIRE(j["expected_but_not_forced"].size() > 0);
}

TEST_CASE("gradient rows require the post-lemma regime") {
    FrameConfig config(6, {Rational(2), Rational(3), Rational(5)}, 1, 1, false);
    REQUIRE_THROWS_AS(build_rows(config, {"T10"}), UsageError);
    REQUIRE(full_row_selection(config).count("T10") == 0);
    // The reduced selection still assembles.
    REQUIRE_NOTHROW(vanishing_report(config));
}

TEST_CASE("row subsets constrain monotonically") {
    FrameConfig config = distinct6();
    nlohmann::json full = vanishing_report(config);
    nlohmann::json partial = vanishing_report(config, {"T23", "SYM"});
    REQUIRE(partial["forced_zero"].size() <= full["forced_zero"].size());
    REQUIRE(partial["unknown_count"].get<std::size_t>() <=
            full["unknown_count"].get<std::size_t>());
    // T23 with the symmetry rows pins the normal-direction off-block column.
    std::set<std::string> forced(partial["forced_zero"].begin(), partial["forced_zero"].end());
    REQUIRE(forced.count("w(3,4,6)") == 1);
}

TEST_CASE("unknown row tags are rejected") {
    REQUIRE_THROWS_AS(vanishing_report(distinct6(), {"T7"}), UsageError);
}

TEST_CASE("degenerate curvature case analysis") {
    // lambda_3 = 1 collides with mu = 1: contradiction branch.
    FrameConfig clash(6, {Rational(1), Rational(3), Rational(5)}, 1, 1);
    nlohmann::json j = degenerate_mu_check(clash);
    REQUIRE(j["verdict"] == "PASS");
    REQUIRE(j["cases"][0]["contradiction"] == true);
    REQUIRE(j["cases"][1]["contradiction"] == false);
    std::set<std::string> block(j["cases"][1]["vanishing"].begin(),
                                j["cases"][1]["vanishing"].end());
    REQUIRE(block == std::set<std::string>{"w(1,1,4)", "w(2,2,4)", "w(1,2,4)", "w(2,1,4)"});
    FrameConfig pre(6, {Rational(2), Rational(3), Rational(5)}, 1, 1, false);
    REQUIRE_THROWS_AS(degenerate_mu_check(pre), UsageError);
}
