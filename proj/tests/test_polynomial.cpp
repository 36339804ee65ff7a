#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace nicety;
using nicety::test::naive_substitute;
using nicety::test::poly;
using nicety::test::poly_map;
using nicety::test::random_map;
using nicety::test::random_polynomial;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("1/24") == Rational(1, 24));
    CHECK(Rational::parse("-8") == Rational(-8));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), DomainError);
    CHECK_THROWS_AS(Rational::parse("a"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
}

TEST_CASE("rational arithmetic stays exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational::binomial(5, 2) == Rational(10));
    CHECK_THROWS_AS(a / Rational(0), DomainError);
}

TEST_CASE("graded lex order") {
    const Polynomial p = poly(2, "x1^2 + x1*x2 + x2^2 + x1 + 1");
    // Ascending storage: 1, x1, x2^2? No: deg 1 term x1; deg 2: x2^2 < x1*x2 < x1^2.
    const auto terms = p.terms();
    REQUIRE(terms.size() == 5);
    CHECK(terms[0].mono.is_constant());
    CHECK(terms[1].mono == Monomial::unit(2, 0));
    CHECK(terms[2].mono == Monomial(Monomial::Exponents{0, 2}));
    CHECK(terms[3].mono == Monomial(Monomial::Exponents{1, 1}));
    CHECK(terms[4].mono == Monomial(Monomial::Exponents{2, 0}));
}

TEST_CASE("add merges like terms and cancels") {
    CHECK(add(poly(1, "x1"), poly(1, "0 - x1")).is_zero());
    CHECK(add(poly(2, "x1^2 + x2"), poly(2, "x2")) == poly(2, "x1^2 + 2*x2"));
    CHECK(add(poly(3, "x1*x3 + x2^2"), poly(3, "0 - x1*x3")) == poly(3, "x2^2"));
}

TEST_CASE("mul basics") {
    CHECK(mul(poly(2, "x1 + x2"), Polynomial::zero(2)).is_zero());
    CHECK(mul(poly(2, "x1 + x2"), poly(2, "x1 - x2")) == poly(2, "x1^2 - x2^2"));
    const Polynomial nagata_p_squared = mul(poly(3, "x1*x3 + x2^2"), poly(3, "x1*x3 + x2^2"));
    CHECK(nagata_p_squared == poly(3, "x1^2*x3^2 + 2*x1*x2^2*x3 + x2^4"));
    CHECK_THROWS_AS(mul(poly(1, "x1"), poly(2, "x1")), DimensionError);
}

TEST_CASE("mul respects the term budget") {
    Limits lim;
    lim.term_limit = 3;
    const Polynomial dense = poly(1, "1 + x1 + x1^2 + x1^3");
    CHECK_THROWS_AS(mul(dense, dense, lim), BudgetError);
}

TEST_CASE("pow") {
    CHECK(pow(poly(2, "x1 - x2"), 0) == Polynomial::one(2));
    CHECK(pow(poly(2, "x1 + x2"), 3) ==
          poly(2, "x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3"));
    // Lowest homogeneous component of (x1^2 + x2)^3 is x2^3.
    CHECK(lowest_component(pow(poly(2, "x1^2 + x2"), 3)) == poly(2, "x2^3"));
}

TEST_CASE("partial derivatives") {
    CHECK(partial(Polynomial::one(2), 0).is_zero());
    CHECK(partial(poly(3, "x1*x3 + x2^2"), 1) == poly(3, "2*x2"));
    // d(L^3)/dx_j = 3 L^2 * (coefficient of x_j in L).
    const Polynomial l = poly(2, "2*x1 - x2");
    CHECK(partial(pow(l, 3), 0) == scale(mul(l, l), Rational(6)));
    CHECK(partial(pow(l, 3), 1) == scale(mul(l, l), Rational(-3)));
    CHECK_THROWS_AS(partial(poly(1, "x1"), 1), DimensionError);
}

TEST_CASE("degree, order, components") {
    const Polynomial p = poly(2, "x1 + (x1^2 + x2)^3");
    CHECK(p.degree() == 6);
    CHECK(p.order() == 1);
    CHECK(!Polynomial::zero(2).degree().has_value());
    CHECK_THROWS_AS(Polynomial::zero(2).order(), DomainError);
    CHECK_THROWS_AS(lowest_component(Polynomial::zero(2)), DomainError);
    CHECK(homogeneous_component(poly(2, "x1^3 + x2"), 3) == poly(2, "x1^3"));
    CHECK(homogeneous_component(poly(2, "x1^3 + x2"), 2).is_zero());
}

TEST_CASE("evaluate") {
    const std::vector<Rational> pt{1, 2, 3};
    CHECK(evaluate(Polynomial::zero(3), pt) == Rational(0));
    CHECK(evaluate(poly(3, "x1*x3 + x2^2"), pt) == Rational(7));
    const std::vector<Rational> sym{Rational(5), Rational(5), Rational(9)};
    CHECK(evaluate(pow(poly(3, "x1 - x2"), 3), sym) == Rational(0));
    CHECK_THROWS_AS(evaluate(poly(2, "x1"), pt), DimensionError);
}

TEST_CASE("substitute basics") {
    const PolyMap f = poly_map(2, {"x1", "x2 + x1^2"});
    CHECK(substitute(poly(2, "x1^2 + x2"), f) == poly(2, "2*x1^2 + x2"));
    // Coordinate projection.
    const PolyMap nagata = poly_map(
        3, {"x1 - 2*(x1*x3 + x2^2)*x2 - (x1*x3 + x2^2)^2*x3", "x2 + (x1*x3 + x2^2)*x3", "x3"});
    CHECK(substitute(poly(3, "x2"), nagata) == nagata.component(1));
    // Nagata's p is invariant: p o F = p.
    const Polynomial p = poly(3, "x1*x3 + x2^2");
    CHECK(substitute(p, nagata) == p);
}

TEST_CASE("compose conventions") {
    const PolyMap f1 = poly_map(2, {"x1 + x2^3", "x2"});
    const PolyMap f2 = poly_map(2, {"x1", "x2 + x1^2"});
    CHECK(compose(f1, PolyMap::identity(2)) == f1);
    CHECK(compose(f1, f2) == poly_map(2, {"x1 + (x1^2 + x2)^3", "x2 + x1^2"}));
    CHECK_THROWS_AS(compose(f1, poly_map(1, {"x1"})), DimensionError);
}

TEST_CASE("exact division") {
    const Polynomial a = poly(2, "x1^2 - x2^2");
    const Polynomial b = poly(2, "x1 - x2");
    CHECK(exact_divide(a, b) == poly(2, "x1 + x2"));
    CHECK_THROWS_AS(exact_divide(poly(2, "x1^2 + x2"), b), DomainError);
    CHECK_THROWS_AS(exact_divide(a, Polynomial::zero(2)), DomainError);
}

TEST_CASE("truncate_degree keeps the low part exactly") {
    const Polynomial p = poly(2, "1 + x1 + x1^2*x2 + x1^3*x2^3");
    CHECK(truncate_degree(p, 3) == poly(2, "1 + x1 + x1^2*x2"));
    CHECK(truncate_degree(p, 0) == Polynomial::one(2));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const Polynomial a = random_polynomial(rng, n, 4, 6);
        const Polynomial b = random_polynomial(rng, n, 4, 6);
        const Polynomial c = random_polynomial(rng, n, 4, 6);
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(sub(a, a).is_zero());
        CHECK(mul(a, Polynomial::one(n)) == a);
    }
}

TEST_CASE("degree is multiplicative over the integral domain") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        Polynomial a = random_polynomial(rng, n, 4, 5);
        Polynomial b = random_polynomial(rng, n, 4, 5);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(*mul(a, b).degree() == *a.degree() + *b.degree());
    }
}

TEST_CASE("substitute agrees with the naive expansion oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dom = 1 + rng() % 3;
        const std::size_t cod = 1 + rng() % 3;
        const Polynomial p = random_polynomial(rng, cod, 3, 5);
        const PolyMap g = random_map(rng, dom, cod, 2, 3);
        CHECK(substitute(p, g) == naive_substitute(p, g));
    }
}

TEST_CASE("substitution distributes over composition") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n1 = 1 + rng() % 2, n2 = 1 + rng() % 2, n3 = 1 + rng() % 2;
        const Polynomial p = random_polynomial(rng, n3, 3, 4);
        const PolyMap g = random_map(rng, n2, n3, 2, 3);
        const PolyMap h = random_map(rng, n1, n2, 2, 3);
        CHECK(substitute(substitute(p, g), h) == substitute(p, compose(g, h)));
    }
}

TEST_CASE("partial is linear and obeys the product rule") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const std::size_t v = rng() % n;
        const Polynomial a = random_polynomial(rng, n, 4, 5);
        const Polynomial b = random_polynomial(rng, n, 4, 5);
        CHECK(partial(add(a, b), v) == add(partial(a, v), partial(b, v)));
        CHECK(partial(mul(a, b), v) ==
              add(mul(partial(a, v), b), mul(a, partial(b, v))));
    }
}

TEST_CASE("order never drops under order-preserving substitution") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        Polynomial p = random_polynomial(rng, n, 3, 4);
        if (p.is_zero()) continue;
        // Build F with every component of order >= 1.
        std::vector<Polynomial> comps;
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial c = random_polynomial(rng, n, 3, 3);
            c = sub(c, Polynomial::constant(n, c.constant_value()));
            if (c.is_zero()) c = Polynomial::variable(n, i);
            comps.push_back(std::move(c));
        }
        const PolyMap f(n, std::move(comps));
        const Polynomial image = substitute(p, f);
        if (!image.is_zero()) CHECK(image.order() >= p.order());
    }
}
