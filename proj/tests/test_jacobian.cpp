#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nicety/constructions.hpp"
#include "nicety/jacobian.hpp"
#include "test_support.hpp"

using namespace nicety;
using nicety::test::poly;
using nicety::test::poly_map;
using nicety::test::random_map;
using nicety::test::random_polynomial;

namespace {

PolyMatrix random_poly_matrix(std::mt19937_64& rng, std::size_t n, std::size_t nvars,
                              int max_degree) {
    std::vector<Polynomial> entries;
    for (std::size_t i = 0; i < n * n; ++i)
        entries.push_back(random_polynomial(rng, nvars, max_degree, 3));
    return PolyMatrix(n, n, std::move(entries));
}

} // namespace

TEST_CASE("jacobian of the identity") {
    PolyMatrix j = jacobian(PolyMap::identity(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(j.at(i, k) == (i == k ? Polynomial::one(3) : Polynomial::zero(3)));
}

TEST_CASE("jacobian of a cube of a linear form") {
    // H = ((x1-x2)^3, (x1-x2)^3): JH = 3 (x1-x2)^2 * [[1,-1],[1,-1]].
    const PolyMap h = poly_map(2, {"(x1 - x2)^3", "(x1 - x2)^3"});
    const PolyMatrix jh = jacobian(h);
    const Polynomial factor = scale(pow(poly(2, "x1 - x2"), 2), Rational(3));
    CHECK(jh.at(0, 0) == factor);
    CHECK(jh.at(0, 1) == negate(factor));
    CHECK(jh.at(1, 0) == factor);
    CHECK(jh.at(1, 1) == negate(factor));
    // (JH)^2 = 0 since the constant matrix is square-zero.
    CHECK(mul(jh, jh).is_zero());
    NilpotenceResult r = nilpotence_index_symbolic(jh, 4);
    CHECK(r.nilpotent);
    CHECK(r.index == 2);
}

TEST_CASE("determinants") {
    CHECK(det(jacobian(PolyMap::identity(4))) == Polynomial::one(4));
    // Equal rows.
    const Polynomial a = poly(2, "x1 + x2"), b = poly(2, "x1*x2");
    PolyMatrix m(2, 2, {a, b, a, b});
    CHECK(det(m).is_zero());
}

TEST_CASE("keller check") {
    CHECK(keller_check(PolyMap::identity(2)).is_keller);
    const KellerResult nag = keller_check(poly_map(
        3, {"x1 - 2*(x1*x3 + x2^2)*x2 - (x1*x3 + x2^2)^2*x3", "x2 + (x1*x3 + x2^2)*x3", "x3"}));
    CHECK(nag.is_keller);
    CHECK(nag.det == Polynomial::one(3));
    const KellerResult not_keller = keller_check(poly_map(2, {"x1^2", "x2"}));
    CHECK(!not_keller.is_keller);
    CHECK(not_keller.det == poly(2, "2*x1"));
    // The non-nice composition of two shears is still Keller with det 1.
    CHECK(keller_check(poly_map(2, {"x1 + (x1^2 + x2)^3", "x2 + x1^2"})).det ==
          Polynomial::one(2));
    CHECK_THROWS_AS(keller_check(PolyMap(2, {Polynomial::zero(2)})), DimensionError);
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        const PolyMatrix m = random_poly_matrix(rng, 3, 2, 2);
        const PolyMatrix n = random_poly_matrix(rng, 3, 2, 2);
        CHECK(det(mul(m, n)) == mul(det(m), det(n)));
    }
}

TEST_CASE("Bareiss path agrees with evaluation at exact points") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 6; ++trial) {
        const PolyMatrix m = random_poly_matrix(rng, 5, 2, 1); // 5x5 takes the Bareiss path
        const Polynomial d = det(m);
        for (int s = 0; s < 3; ++s) {
            std::vector<Rational> point{Rational(nicety::test::draw_in(rng, -9, 9)),
                                        Rational(nicety::test::draw_in(rng, -9, 9))};
            CHECK(m.evaluate(point).determinant() == evaluate(d, point));
        }
    }
}

TEST_CASE("chain rule") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 2 + rng() % 2;
        const PolyMap f = random_map(rng, n, n, 2, 3);
        const PolyMap g = random_map(rng, n, n, 2, 3);
        const PolyMatrix lhs = jacobian(compose(f, g));
        const PolyMatrix rhs = mul(substitute(jacobian(f), g), jacobian(g));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("nilpotence of the zero matrix") {
    PolyMatrix z(3, 3, 2);
    NilpotenceResult sym = nilpotence_index_symbolic(z, 5);
    CHECK(sym.nilpotent);
    CHECK(sym.index == 1);
    NilpotenceResult rnd = nilpotence_index_randomized(z, 5, 4, 99);
    CHECK(rnd.nilpotent);
    CHECK(rnd.index == 1);
    CHECK(rnd.randomized);
}

TEST_CASE("non-nilpotent matrices are reported as such") {
    PolyMatrix m(2, 2, {poly(1, "x1"), Polynomial::zero(1), Polynomial::zero(1), poly(1, "x1")});
    CHECK(!nilpotence_index_symbolic(m, 6).nilpotent);
    CHECK(!nilpotence_index_randomized(m, 6, 4, 5).nilpotent);
}

TEST_CASE("randomized index never exceeds the symbolic index") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 3;
        const RatMatrix a = random_strictly_lower_nilpotent3(n, 3, rng());
        const DruzkowskiMap d = druzkowski(a);
        const PolyMatrix jh = jacobian(d.cubic_part);
        const NilpotenceResult sym = nilpotence_index_symbolic(jh, 8);
        const NilpotenceResult rnd = nilpotence_index_randomized(jh, 8, 4, rng());
        REQUIRE(sym.nilpotent);
        REQUIRE(rnd.nilpotent);
        CHECK(rnd.index <= sym.index);
    }
}

TEST_CASE("cubic-linear Jacobian has the diagonal-times-matrix shape") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        RatMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a.at(i, j) = Rational(nicety::test::draw_in(rng, -2, 2));
        const DruzkowskiMap d = druzkowski(a);
        const PolyMatrix jh = jacobian(d.cubic_part);
        for (std::size_t i = 0; i < n; ++i) {
            const Polynomial li2 = scale(mul(d.linear_forms[i], d.linear_forms[i]), Rational(3));
            for (std::size_t j = 0; j < n; ++j)
                CHECK(jh.at(i, j) == scale(li2, a.at(i, j)));
        }
    }
}

TEST_CASE("matrix substitution and evaluation validate each other") {
    std::mt19937_64 rng(61);
    const PolyMatrix m = random_poly_matrix(rng, 2, 2, 2);
    const PolyMap g = random_map(rng, 2, 2, 2, 3);
    const PolyMatrix mg = substitute(m, g);
    const std::vector<Rational> pt{Rational(3), Rational(-2)};
    const std::vector<Rational> gpt = g.evaluate(pt);
    CHECK(mg.evaluate(pt) == m.evaluate(gpt));
}
