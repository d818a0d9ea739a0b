#include "doctest.h"

#include "hopf/rng.hpp"
#include "hopf/scalar.hpp"

using namespace hopf;

namespace {

Scalar random_scalar(Rng& rng, long quad_d) {
    const Rational a(rng.range(-8, 8), rng.range(1, 5));
    if (quad_d == 0 || rng.coin()) return Scalar(a);
    const Rational b(rng.range(-8, 8), rng.range(1, 5));
    return b.is_zero() ? Scalar(a) : Scalar::quad(quad_d, a, b);
}

UniPoly poly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("rationals stay canonical") {
    const Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(-7, 2).str() == "-7/2");
}

TEST_CASE("field axioms on random triples") {
    for (const long d : {0L, 2L, -3L}) {
        Rng rng(11 + static_cast<unsigned long>(d));
        for (int it = 0; it < 200; ++it) {
            const Scalar a = random_scalar(rng, d);
            const Scalar b = random_scalar(rng, d);
            const Scalar c = random_scalar(rng, d);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
        }
    }
}

TEST_CASE("quadratic arithmetic") {
    const Scalar r2 = Scalar::quad(2, Rational(0), Rational(1));
    CHECK(r2 * r2 == Scalar(2));
    CHECK(Scalar::quad(2, Rational(1), Rational(1)) *
              Scalar::quad(2, Rational(1), Rational(-1)) ==
          Scalar(-1));
    // b = 0 collapses to the rational form
    CHECK(Scalar::quad(2, Rational(5), Rational(0)).is_rational());
    CHECK_THROWS_AS(Scalar::quad(4, Rational(0), Rational(1)), InvalidParameter);
    CHECK_THROWS_AS(Scalar::quad(2, 0, 1) + Scalar::quad(3, 0, 1), FieldMismatch);
}

TEST_CASE("find_roots: linear") {
    // p = 2 - s
    const auto roots = find_roots(poly({2, -1}));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == Scalar(2));
}

TEST_CASE("find_roots: s^2 - 2") {
    const auto roots = find_roots(poly({-2, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Scalar::quad(2, Rational(0), Rational(1)));
    CHECK(roots[1] == Scalar::quad(2, Rational(0), Rational(-1)));
    for (const auto& r : roots) CHECK(poly({-2, 0, 1}).eval(r).is_zero());
}

TEST_CASE("find_roots: s^3 - 1 splits into Q root and quadratic pair") {
    const UniPoly p = poly({-1, 0, 0, 1});
    const auto roots = find_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Scalar(1));
    CHECK(roots[1].quad_d() == -3);
    // every root vanishes under exact substitution
    for (const auto& r : roots) CHECK(p.eval(r).is_zero());
}

TEST_CASE("find_roots strips multiplicity and reports high-degree residuals") {
    // (s-1)^2 (s+2)
    const UniPoly p = poly({2, -3, 0, 1});
    const auto roots = find_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Scalar(1));
    CHECK(roots[1] == Scalar(-2));

    // s^4 + s + 1 has no rational root and a quartic residual
    CHECK_THROWS_AS(find_roots(poly({1, 1, 0, 0, 1})), ResidualDegreeTooHigh);
    try {
        find_roots(poly({1, 1, 0, 0, 1}));
    } catch (const ResidualDegreeTooHigh& e) {
        CHECK(e.residual.degree() == 4);
    }
}

TEST_CASE("deflate") {
    // p = 2 - s at r = 2
    auto q = deflate(poly({2, -1}), Scalar(2));
    REQUIRE(q.size() == 1);
    CHECK(q[0] == Scalar(-1));

    // p = s^2 - 1 at r = 1 -> (1 + s)
    q = deflate(poly({-1, 0, 1}), Scalar(1));
    REQUIRE(q.size() == 2);
    CHECK(q[0] == Scalar(1));
    CHECK(q[1] == Scalar(1));

    // p = 1 + s at r = -1
    q = deflate(poly({1, 1}), Scalar(-1));
    REQUIRE(q.size() == 1);
    CHECK(q[0] == Scalar(1));

    CHECK_THROWS_AS(deflate(poly({1, 1}), Scalar(3)), NotARoot);
}

TEST_CASE("deflate and re-expansion round-trips") {
    Rng rng(7);
    for (int it = 0; it < 50; ++it) {
        // build p = (s - r) q with random rational q and root r
        std::vector<Rational> qc;
        const int deg = static_cast<int>(rng.range(1, 4));
        for (int i = 0; i <= deg; ++i) qc.emplace_back(rng.range(-5, 5), rng.range(1, 3));
        qc.back() = Rational(1);
        const UniPoly q(std::move(qc));
        const Rational r(rng.range(-4, 4), rng.range(1, 3));
        const UniPoly p = q * poly({0, 1}) - q.scale(r);
        const auto back = deflate(p, Scalar(r));
        REQUIRE(static_cast<long>(back.size()) == q.degree() + 1);
        for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == Scalar(q.coeff(i)));
    }
}

TEST_CASE("squarefree decomposition") {
    mpz_class s;
    CHECK(squarefree_decompose(mpz_class(8), s) == 2);
    CHECK(s == 2);
    CHECK(squarefree_decompose(mpz_class(-12), s) == -3);
    CHECK(s == 2);
    CHECK(squarefree_decompose(mpz_class(49), s) == 1);
    CHECK(s == 7);
}

}  // TEST_SUITE
