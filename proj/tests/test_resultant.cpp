#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exspec/resultant.hpp"
#include "support.hpp"

using exspec::Int;
using exspec::Polynomial;
using exspec::Rational;

TEST_CASE("numeric resultant on known pairs") {
    // Res(x-a, x-b) = a - b
    Polynomial pa = Polynomial::linear_root(Rational(5));
    Polynomial pb = Polynomial::linear_root(Rational(2));
    CHECK(exspec::resultant(pa, pb) == Rational(3));
    // common root
    CHECK(exspec::resultant(Polynomial::from_roots({Rational(1), Rational(2)}),
                            Polynomial::from_roots({Rational(2), Rational(7)})) == Rational(0));
    // product formula over root pairs: roots {0,1} vs {2,3}
    CHECK(exspec::resultant(Polynomial::from_roots({Rational(0), Rational(1)}),
                            Polynomial::from_roots({Rational(2), Rational(3)})) ==
          Rational((0 - 2) * (0 - 3) * (1 - 2) * (1 - 3)));
}

TEST_CASE("resultant matches the root-product oracle on random spectra") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 60; ++rep) {
        auto a = exspec::test::random_spectrum(rng, 4, 8, 1, 1);
        auto b = exspec::test::random_spectrum(rng, 4, 8, 1, 1);
        Rational expected(1);
        for (const auto& ra : a.roots)
            for (const auto& rb : b.roots) expected *= ra - rb;
        CHECK(exspec::resultant(a.min_poly(), b.min_poly()) == expected);
    }
}

TEST_CASE("shift resultant: degree-1 pair") {
    // Res_x(x-a, (x+z)-b) = a - b + z: root at z = b - a.
    Polynomial r = exspec::shift_resultant(Polynomial::linear_root(Rational(3)),
                                           Polynomial::linear_root(Rational(7)));
    CHECK(r.degree() == 1);
    CHECK(r.leading().abs() == Rational(1));
    CHECK(r(Rational(4)) == Rational(0));
}

TEST_CASE("shift resultant of p with itself: x^2 - 1") {
    // roots +-1, ordered differences {0, 0, +-2}: c * z^2 * (z^2 - 4)
    Polynomial p{Rational(-1), Rational(0), Rational(1)};
    Polynomial r = exspec::shift_resultant(p, p);
    CHECK(r.degree() == 4);
    CHECK(r.coeff(0).is_zero());
    CHECK(r.coeff(1).is_zero());
    CHECK_FALSE(r.coeff(2).is_zero());
    CHECK(r(Rational(2)) == Rational(0));
    CHECK(r(Rational(-2)) == Rational(0));
    CHECK(r(Rational(1)) != Rational(0));
}

TEST_CASE("shift resultant of x(x-1)(x-3) with itself") {
    Polynomial p = Polynomial::from_roots({Rational(0), Rational(1), Rational(3)});
    Polynomial r = exspec::shift_resultant(p, p);
    CHECK(r.degree() == 9);
    for (long d : {0L, 1L, 2L, 3L, -1L, -2L, -3L}) CHECK(r(Rational(d)) == Rational(0));
    for (long d : {4L, -4L, 5L}) CHECK(r(Rational(d)) != Rational(0));
}

TEST_CASE("shift resultant vanishes exactly at all ordered root differences") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 25; ++rep) {
        auto s = exspec::test::random_spectrum(rng, 4, 10, 1, 2);
        Polynomial p = s.min_poly();
        Polynomial r = exspec::shift_resultant(p, p);
        for (const auto& pi : s.roots)
            for (const auto& pj : s.roots) CHECK(r(pi - pj) == Rational(0));
        // and nowhere else among small integers
        for (long z = -25; z <= 25; ++z) {
            bool is_diff = false;
            for (const auto& pi : s.roots)
                for (const auto& pj : s.roots)
                    if (pi - pj == Rational(z)) is_diff = true;
            if (!is_diff) CHECK(r(Rational(z)) != Rational(0));
        }
    }
}

TEST_CASE("interpolation reproduces polynomials") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> dc(-9, 9);
    for (int rep = 0; rep < 40; ++rep) {
        int deg = rep % 7;
        std::vector<Rational> cs(static_cast<std::size_t>(deg) + 1);
        for (auto& c : cs) c = Rational(dc(rng));
        if (cs.back().is_zero()) cs.back() = Rational(2);
        Polynomial p(std::move(cs));
        std::vector<Rational> nodes, values;
        for (long e = 0; e <= deg; ++e) {
            nodes.emplace_back(e);
            values.push_back(p(Rational(e)));
        }
        CHECK(exspec::interpolate(nodes, values) == p);
    }
}
