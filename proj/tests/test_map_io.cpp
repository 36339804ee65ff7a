#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace nicety;
using nicety::test::poly_map;
using nicety::test::random_map;

TEST_CASE("parse a one-variable identity") {
    const ParsedMap pm = parse_map("vars: x\nF1 = x\n");
    CHECK(pm.var_names == std::vector<std::string>{"x"});
    CHECK(pm.map == PolyMap::identity(1));
}

TEST_CASE("parse expands expressions to canonical form") {
    const ParsedMap pm = parse_map(
        "vars: x1 x2 x3\n"
        "F1 = x1 - 2*(x1*x3 + x2^2)*x2 - (x1*x3 + x2^2)^2*x3\n"
        "F2 = x2 + (x1*x3 + x2^2)*x3\n"
        "F3 = x3\n");
    CHECK(pm.map.codomain_dim() == 3);
    // Spot the expansion of the first component's quadratic-in-p term.
    const Polynomial p = nicety::test::poly(3, "x1*x3 + x2^2");
    const Polynomial expected = sub(
        sub(Polynomial::variable(3, 0), scale(mul(p, Polynomial::variable(3, 1)), Rational(2))),
        mul(mul(p, p), Polynomial::variable(3, 2)));
    CHECK(pm.map.component(0) == expected);
}

TEST_CASE("comments and blank lines are ignored") {
    const ParsedMap pm = parse_map(
        "# a triangular map\nvars: x1 x2  # two variables\n\nF1 = x1 + x2^3\n\n# done\nF2 = x2\n");
    CHECK(pm.map == poly_map(2, {"x1 + x2^3", "x2"}));
}

TEST_CASE("parse errors carry positions") {
    // Negative exponent.
    try {
        parse_map("vars: x1\nF1 = x1^(-1)\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 9);
    }
    // Unknown identifier.
    try {
        parse_map("vars: x1\nF1 = x1 + y\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 11);
    }
    // Implicit multiplication is rejected.
    CHECK_THROWS_AS(parse_map("vars: x1\nF1 = 2x1\n"), ParseError);
    // Zero denominator.
    CHECK_THROWS_AS(parse_map("vars: x1\nF1 = 1/0\n"), ParseError);
    // Duplicate variable.
    CHECK_THROWS_AS(parse_map("vars: x x\nF1 = x\n"), ParseError);
    // Missing header.
    CHECK_THROWS_AS(parse_map("F1 = x\n"), ParseError);
    // Empty body.
    CHECK_THROWS_AS(parse_map("vars: x\n"), ParseError);
}

TEST_CASE("unary minus binds looser than caret") {
    const ParsedMap pm = parse_map("vars: x\nF1 = -x^2\n");
    CHECK(pm.map.component(0) == negate(nicety::test::poly(1, "x1^2")));
}

TEST_CASE("render canonical forms") {
    CHECK(render_map(PolyMap::identity(2), {"x1", "x2"}) ==
          "vars: x1 x2\nF1 = x1\nF2 = x2\n");
    const PolyMap zero(1, {Polynomial::zero(1)});
    CHECK(render_map(zero, {"x1"}) == "vars: x1\nF1 = 0\n");
    CHECK(render_polynomial(nicety::test::poly(2, "x1^2 - 2*x2 + 1/2"), {"x1", "x2"}) ==
          "x1^2 - 2*x2 + 1/2");
    CHECK(render_polynomial(negate(nicety::test::poly(2, "x1*x2")), {"x1", "x2"}) == "-x1*x2");
    CHECK_THROWS_AS(render_map(PolyMap::identity(2), {"x1"}), DimensionError);
}

TEST_CASE("round trip is exact and deterministic on random maps") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const PolyMap f = random_map(rng, n, 1 + rng() % 4, 6, 8);
        const auto names = default_names(n);
        const std::string text = render_map(f, names);
        const ParsedMap back = parse_map(text);
        CHECK(back.map == f);
        CHECK(render_map(back.map, names) == text);
    }
}

TEST_CASE("malformed input throws ParseError, never crashes") {
    const char* bad[] = {"",
                         "vars:\n",
                         "vars: x\nF1 = \n",
                         "vars: x\nF1 = x +\n",
                         "vars: x\nF1 = (x\n",
                         "vars: x\nF1 = x ^ x\n",
                         "vars: x\nF1 = x / 2\n",
                         "vars: x\nF1 = * x\n",
                         "vars: x\nF1 == x\n",
                         "vars: x\n= x\n",
                         "vars: x\nF1 = 3..\n",
                         "vars: x\nF1 = @\n"};
    for (const char* text : bad) CHECK_THROWS_AS(parse_map(text), ParseError);
}

TEST_CASE("matrix JSON round trip") {
    const RatMatrix m = parse_matrix(R"({"rows":1,"cols":1,"entries":[["1/24"]]})");
    CHECK(m.at(0, 0) == Rational(1, 24));
    const std::string rendered = render_matrix(m);
    CHECK(parse_matrix(rendered) == m);

    CHECK_THROWS_AS(parse_matrix("{"), DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows":1,"cols":2,"entries":[["1"]]})"), DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows":1,"cols":1,"entries":[["1/0"]]})"), DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"rows":1,"cols":1,"entries":[[7]]})"), DomainError);
}

TEST_CASE("matrix inverse and determinant") {
    RatMatrix t(2, 2);
    t.at(0, 0) = 0; t.at(0, 1) = 1;
    t.at(1, 0) = 1; t.at(1, 1) = 0;
    CHECK(mul(t, t.inverse()).is_identity());
    CHECK(t.determinant() == Rational(-1));

    RatMatrix sing(2, 2);
    sing.at(0, 0) = 1; sing.at(0, 1) = 2;
    sing.at(1, 0) = 2; sing.at(1, 1) = 4;
    CHECK(sing.determinant() == Rational(0));
    CHECK_THROWS_AS(sing.inverse(), SingularMatrixError);
}
