#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exspec/eigen_bounds.hpp"
#include "exspec/wgp_rates.hpp"
#include "support.hpp"

using exspec::Int;
using exspec::Polynomial;
using exspec::RatInterval;
using exspec::Rational;

TEST_CASE("wgp_poly") {
    CHECK(exspec::wgp_poly(3, Rational(0), Rational(1)) ==
          Polynomial::from_roots({Rational(0), Rational(1), Rational(2)}));
    CHECK(exspec::wgp_poly(3, Rational(1), Rational(1)) ==
          Polynomial::from_roots({Rational(1), Rational(2), Rational(3)}));
    CHECK(exspec::wgp_poly(4, Rational(0), Rational(Int(1), Int(2))) ==
          Polynomial::from_roots({Rational(0), Rational(Int(1), Int(2)), Rational(1),
                                  Rational(Int(3), Int(2))}));
    CHECK_THROWS_AS(exspec::wgp_poly(2, Rational(0), Rational(1)), exspec::Error);
    CHECK_THROWS_AS(exspec::wgp_poly(3, Rational(0), Rational(0)), exspec::Error);
}

TEST_CASE("w-recurrence values") {
    CHECK(exspec::w_sq_iterate(3, Rational(0)) == Rational(Int(4), Int(9)));
    CHECK(exspec::w_sq_iterate(4, Rational(0)) == Rational(Int(36), Int(143)));
    Rational w(0);
    for (int k = 0; k < 8; ++k) {
        Rational next = exspec::w_sq_iterate(5, w);
        CHECK(next > w);
        CHECK(next < Rational(1));
        w = next;
    }
    CHECK_THROWS_AS(exspec::w_sq_iterate(3, Rational(1)), exspec::Error);
}

TEST_CASE("paper constants B and A") {
    CHECK(exspec::B_of_m(3) == Rational(Int(1), Int(6)));
    CHECK(exspec::B_of_m(4) == Rational(Int(19), Int(72)));
    CHECK(exspec::B_of_m(5) == Rational(Int(79), Int(240)));
    CHECK(exspec::A_of_m(3) == Rational(Int(4), Int(9)));
    CHECK(Rational(1) - exspec::A_of_m(3) == Rational(Int(5), Int(9)));
    CHECK(exspec::A_of_m(4) == Rational(Int(27), Int(100)));
    CHECK(Rational(1) - exspec::A_of_m(4) == Rational(Int(73), Int(100)));
}

TEST_CASE("B matches the harmonic closed form") {
    // B(m) = 3/4 - (1/(m-1)) (1 + 1/(2m) + sum_{l=3}^{m-1} 1/l)
    for (int m = 3; m <= 14; ++m) {
        Rational harmonic(0);
        for (long l = 3; l < m; ++l) harmonic += Rational(Int(1), Int(l));
        Rational closed = Rational(Int(3), Int(4)) -
                          (Rational(1) + Rational(Int(1), Int(2 * m)) + harmonic) /
                              Rational(m - 1);
        CHECK(exspec::B_of_m(m) == closed);
    }
}

TEST_CASE("B is increasing and below 3/4 up to m = 1000") {
    Rational prev = exspec::B_of_m(3);
    for (int m = 4; m <= 100; ++m) {
        Rational b = exspec::B_of_m(m);
        CHECK(b > prev);
        CHECK(b < Rational(Int(3), Int(4)));
        prev = b;
    }
    for (int m : {250, 500, 1000}) {
        Rational b = exspec::B_of_m(m);
        CHECK(b > prev);
        CHECK(b < Rational(Int(3), Int(4)));
        prev = b;
    }
}

TEST_CASE("A asymptotics ~ 4/(7(m-1))") {
    Rational a = exspec::A_of_m(1000);
    Rational predicted = Rational(4) / (Rational(7) * Rational(999));
    Rational ratio = a / predicted;
    CHECK(ratio > Rational(Int(99), Int(100)));
    CHECK(ratio < Rational(Int(101), Int(100)));
}

TEST_CASE("v-recurrence ties to the w-recurrence") {
    for (int m = 3; m <= 5; ++m) {
        Rational w(0), v(1);
        for (int k = 0; k < 6; ++k) {
            w = exspec::w_sq_iterate(m, w);
            v = exspec::v_iterate(m, v);
            CHECK(v == Rational(1) - w);
        }
    }
    CHECK(exspec::v_iterate(3, Rational(1)) == Rational(Int(5), Int(9)));
}

TEST_CASE("interval iteration brackets the exact one") {
    for (int m : {3, 4, 6}) {
        Rational v(1);
        RatInterval iv{Rational(1), Rational(1)};
        for (int k = 0; k < 10; ++k) {
            v = exspec::v_iterate(m, v);
            iv = exspec::v_iterate_interval(m, iv, 128);
            CHECK(iv.lo <= v);
            CHECK(v <= iv.hi);
            CHECK(iv.width() < Rational(Int(1), Int(1) << 20));
        }
    }
}

TEST_CASE("rate report: m = 3 sandwich clean, m = 4 anomaly at the start") {
    exspec::RateReport r3 = exspec::rate_report(3, Rational(Int(1), Int(1000000)), 25);
    for (const auto& s : r3.sandwich) CHECK(s.state == exspec::SandwichState::Holds);
    CHECK(r3.lower_geo == Rational(Int(1), Int(2)));
    CHECK(r3.upper_geo == Rational(Int(5), Int(9)));
    CHECK(r3.k_min < r3.k_max);
    // ln(1e6)/ln2 ~ 19.9, ln(1e6)/ln(9/5) ~ 23.5
    CHECK(r3.k_min >= 19);
    CHECK(r3.k_max <= 25);

    exspec::RateReport r4 = exspec::rate_report(4, Rational(Int(1), Int(1000000)), 25);
    REQUIRE(r4.sandwich.size() == 25);
    CHECK(r4.sandwich[0].state == exspec::SandwichState::Violated); // k = 1: v_1 = 107/143 > 73/100
    CHECK(r4.sandwich[1].state == exspec::SandwichState::Violated); // k = 2, barely
    for (std::size_t i = 2; i < r4.sandwich.size(); ++i)
        CHECK(r4.sandwich[i].state == exspec::SandwichState::Holds);
    CHECK(r4.v_lower[1] == Rational(Int(107), Int(143)));
}

TEST_CASE("monotone in m") {
    CHECK(exspec::monotone_in_m_check(3, 1)); // 36/143 < 4/9
    CHECK(exspec::monotone_in_m_check(5, 3));
    CHECK(exspec::monotone_in_m_check(4, 8));
    CHECK_THROWS_AS(exspec::monotone_in_m_check(3, 0), exspec::Error);
}

TEST_CASE("scaled gap iterates on equidistant spectra match mu^2 w_k^2") {
    // small smoke version of the full acceptance sweep
    for (int m : {3, 4}) {
        Polynomial wgp = exspec::wgp_poly(m, Rational(Int(2), Int(7)), Rational(Int(3), Int(2)));
        exspec::IterationControl ctl;
        ctl.tol = Rational(0);
        ctl.max_iter = 6;
        ctl.round = false;
        exspec::GapIteration gap = exspec::run_gap_iteration(
            exspec::squared_difference_poly(wgp), ctl);
        Rational mu_sq(Int(9), Int(4));
        Rational w(0);
        for (std::size_t k = 1; k < gap.eps_sq.size(); ++k) {
            w = exspec::w_sq_iterate(m, w);
            CHECK(gap.eps_sq[k] == mu_sq * w);
        }
    }
}

TEST_CASE("WGP is the slowest converger at equal m and mu") {
    // certified comparison: random-spectrum iterates rounded down, WGP
    // iterates rounded up; strict order must still hold.
    std::mt19937_64 rng(83);
    for (int rep = 0; rep < 9; ++rep) {
        exspec::test::Spectrum s =
            exspec::test::random_spectrum(rng, 3 + rep % 3, 12, 1, 3 + rep % 3);
        if (s.m() < 3) continue;
        bool equidistant = true;
        for (int i = 2; i < s.m(); ++i)
            if (s.roots[static_cast<std::size_t>(i)] - s.roots[static_cast<std::size_t>(i - 1)] !=
                s.roots[1] - s.roots[0])
                equidistant = false;
        if (equidistant) continue;
        Polynomial g = exspec::squared_difference_poly(s.min_poly());
        exspec::IterationControl ctl;
        ctl.tol = Rational(0);
        ctl.max_iter = 10;
        ctl.round = true;
        ctl.round_trigger_bits = 320;
        ctl.round_grid_bits = 319;
        exspec::GapIteration gap = exspec::run_gap_iteration(g, ctl);
        Rational mu_sq = s.mu_sq();
        RatInterval w{Rational(0), Rational(0)};
        for (std::size_t k = 1; k < gap.eps_sq.size(); ++k) {
            w = exspec::w_sq_iterate_interval(s.m(), w, 319);
            CHECK(gap.eps_sq[k] >= mu_sq * w.hi);
        }
    }
}
