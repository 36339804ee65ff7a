#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nicety/constructions.hpp"
#include "nicety/jacobian.hpp"
#include "test_support.hpp"

using namespace nicety;
using nicety::test::poly;
using nicety::test::poly_map;

namespace {

RatMatrix mat(std::size_t r, std::size_t c, const std::vector<std::vector<long>>& rows) {
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

} // namespace

TEST_CASE("triangular generator") {
    CHECK(make_triangular(1, 5) == PolyMap::identity(1));
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const PolyMap f = make_triangular(2 + seed % 4, seed);
        CHECK(is_triangular(f));
    }
    CHECK(make_triangular(4, 7) == make_triangular(4, 7)); // deterministic
}

TEST_CASE("triangular recognizer") {
    CHECK(is_triangular(PolyMap::identity(3)));
    CHECK(is_triangular(poly_map(2, {"x1 + x2^3", "x2"})));
    CHECK(!is_triangular(poly_map(2, {"x1", "x2 + x1^2"}))); // wrong orientation
    CHECK(!is_triangular(poly_map(
        3, {"x1 - 2*(x1*x3 + x2^2)*x2 - (x1*x3 + x2^2)^2*x3", "x2 + (x1*x3 + x2^2)*x3", "x3"})));
}

TEST_CASE("conjugation is a group action") {
    const PolyMap f = poly_map(2, {"x1 + x2^3", "x2"});
    CHECK(conjugate(f, RatMatrix::identity(2)) == f);
    const RatMatrix t = mat(2, 2, {{0, 1}, {1, 0}});
    const PolyMap swapped = conjugate(f, t);
    CHECK(swapped == poly_map(2, {"x1", "x2 + x1^3"}));
    CHECK(conjugate(swapped, t.inverse()) == f);
    CHECK_THROWS_AS(conjugate(f, mat(2, 2, {{1, 2}, {2, 4}})), SingularMatrixError);
}

TEST_CASE("cubic-linear builder") {
    const DruzkowskiMap zero = druzkowski(RatMatrix(2, 2));
    CHECK(zero.map.is_identity());

    const DruzkowskiMap d = druzkowski(mat(2, 2, {{1, -1}, {1, -1}}));
    CHECK(d.map == poly_map(2, {"x1 + (x1 - x2)^3", "x2 + (x1 - x2)^3"}));
    // L = x1 - x2 is invariant under F, hence H o F = H.
    CHECK(substitute(d.cubic_part.component(0), d.map) == d.cubic_part.component(0));
    NicetyReport rep = check_nice(d.map);
    CHECK(rep.m == 2);
    CHECK(*rep.inverse == map_sub(PolyMap::identity(2), d.cubic_part));
}

TEST_CASE("rank-one A with orthogonal v alone does not control (JH)^2") {
    // u = (1, 2), v = (2, -1): A = u v^T has A^2 = 0, yet the cubic-linear
    // map is not even Keller and (JH)^2 != 0.  This is why the sampler
    // restricts u to entries in {-1, 0, 1}.
    const RatMatrix a = mat(2, 2, {{2, -1}, {4, -2}});
    CHECK(mul(a, a).is_zero());
    const DruzkowskiMap d = druzkowski(a);
    const PolyMatrix jh = jacobian(d.cubic_part);
    CHECK(!mul(jh, jh).is_zero());
    CHECK(!keller_check(d.map).is_keller);
}

TEST_CASE("rank-one sampler gives square-zero Jacobians and nice maps") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const std::size_t n = 2 + seed % 5;
        const RatMatrix a = random_rank_one_nilpotent(n, seed);
        CHECK(mul(a, a).is_zero());
        const DruzkowskiMap d = druzkowski(a);
        const PolyMatrix jh = jacobian(d.cubic_part);
        CHECK(mul(jh, jh).is_zero());
        NicetyReport rep = check_nice(d.map);
        REQUIRE(rep.verdict == Verdict::nice);
        CHECK(rep.m <= 2);
        CHECK(*rep.inverse == map_sub(PolyMap::identity(n), d.cubic_part));
    }
}

TEST_CASE("strictly lower sampler keeps (JH)^3 = 0") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const std::size_t n = 2 + seed % 3;
        const RatMatrix a = random_strictly_lower_nilpotent3(n, 3, seed);
        const DruzkowskiMap d = druzkowski(a);
        const PolyMatrix jh = jacobian(d.cubic_part);
        CHECK(mul(mul(jh, jh), jh).is_zero());
    }
}

TEST_CASE("the full lower-triangular chain needs more than five steps") {
    // A = subdiagonal ones in dimension 4: (JH)^3 != 0, and the vanishing
    // step sits past 5, which is why the (JH)^3 = 0 hypothesis cannot be
    // dropped from the degree-9 statement.
    const RatMatrix a =
        mat(4, 4, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    const DruzkowskiMap d = druzkowski(a);
    const PolyMatrix jh = jacobian(d.cubic_part);
    CHECK(!mul(mul(jh, jh), jh).is_zero());
    NicetyReport rep = check_nice(d.map, 16);
    REQUIRE(rep.verdict == Verdict::nice); // triangular, so still nice
    CHECK(rep.m > 5);
}

TEST_CASE("pairing check on the trivial pair") {
    const PolyMap f = poly_map(2, {"x1 + x2^2", "x2"});
    GZReport rep = gz_check(GZPair{f, f, RatMatrix::identity(2), RatMatrix::identity(2)}, 4);
    CHECK(rep.all_ok);
}

TEST_CASE("pairing check on a padded pair, with negative controls") {
    // F = f on the first n coordinates plus identity padding; B = [I 0],
    // C = [I; 0] is a valid pairing.
    const PolyMap f = poly_map(2, {"x1 + x2^3", "x2"});
    const std::size_t n = 2, big_n = 4;
    std::vector<Polynomial> comps;
    // Re-embed the components of f into 4 variables through the coordinate
    // projection (x1, x2, x3, x4) -> (x1, x2).
    RatMatrix project(n, big_n);
    project.at(0, 0) = 1;
    project.at(1, 1) = 1;
    const PolyMap projection = PolyMap::linear(project);
    for (std::size_t i = 0; i < n; ++i)
        comps.push_back(substitute(f.component(i), projection));
    for (std::size_t i = n; i < big_n; ++i) comps.push_back(Polynomial::variable(big_n, i));
    const PolyMap big(big_n, std::move(comps));
    RatMatrix b(n, big_n);
    b.at(0, 0) = 1;
    b.at(1, 1) = 1;
    RatMatrix c(big_n, n);
    c.at(0, 0) = 1;
    c.at(1, 1) = 1;

    GZReport rep = gz_check(GZPair{f, big, b, c}, 4);
    CHECK(rep.all_ok);

    // F is nice, so f must be nice with a vanishing step no later.
    NicetyReport big_rep = check_nice(big);
    NicetyReport small_rep = check_nice(f);
    REQUIRE(big_rep.verdict == Verdict::nice);
    REQUIRE(small_rep.verdict == Verdict::nice);
    CHECK(small_rep.m <= big_rep.m);

    // Perturbing one entry of B breaks an identity.
    RatMatrix bad = b;
    bad.at(0, 1) = Rational(1, 2); // pollutes both B C and the base pairing
    GZReport broken = gz_check(GZPair{f, big, bad, c}, 2);
    CHECK(!broken.all_ok);
    CHECK((!broken.bc_identity || !broken.base_pairing));
}

TEST_CASE("eighth-class construction composes") {
    const HubbersMaps maps = hubbers_eighth();
    CHECK(compose(maps.g, maps.h) == maps.f);
    CHECK_THROWS_AS(hubbers_eighth(HubbersParams{1, 1, 0, 1, 1, 1}), DomainError);

    // Non-default rational parameters still satisfy F = G o H.
    HubbersParams p;
    p.e3 = Rational(2);
    p.e4 = Rational(-1, 2);
    p.g4 = Rational(3);
    p.k3 = Rational(1, 3);
    p.k4 = Rational(-2);
    p.m4 = Rational(5, 2);
    const HubbersMaps other = hubbers_eighth(p);
    CHECK(compose(other.g, other.h) == other.f);
    NicetyReport hrep = check_nice(other.h, 32);
    CHECK(hrep.verdict == Verdict::nice);
}

TEST_CASE("random invertible matrices") {
    CHECK(!random_linear_invertible(1, -3, 3, 4).at(0, 0).is_zero());
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RatMatrix t = random_linear_invertible(1 + seed % 4, -3, 3, seed);
        CHECK(!t.determinant().is_zero());
    }
    CHECK(random_linear_invertible(3, -3, 3, 11) == random_linear_invertible(3, -3, 3, 11));
}
