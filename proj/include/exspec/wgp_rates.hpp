#pragma once

#include "exspec/enclosure.hpp"
#include "exspec/polynomial.hpp"

namespace exspec {

/*
 * Closed-form convergence-rate machinery for the equidistant-root
 * ("generalized Wilkinson") polynomials, the slowest case of the gap
 * iteration.  The w/v recurrences are dimensionless: the gap engine on
 * any equidistant spectrum reproduces mu^2 * w_k^2 exactly.
 */

enum class SandwichState { Holds, Violated, Undecided };

struct SandwichStatus {
    int k = 0;
    SandwichState state = SandwichState::Undecided;
};

struct RateReport {
    int m = 0;
    Rational B;
    Rational A;
    Rational lower_geo;              // (m-2)/(m-1)
    Rational upper_geo;              // 1 - A(m)
    std::vector<Rational> v_lower;   // certified lower bounds on v_k, v_0 = 1
    std::vector<Rational> v_upper;   // certified upper bounds on v_k
    std::vector<SandwichStatus> sandwich;
    long k_min = 0; // conservative window for reaching v_k < delta
    long k_max = 0;
};

// prod_{l=0}^{m-1} (x - p1 - mu*l); requires m >= 3, mu > 0.
Polynomial wgp_poly(int m, const Rational& p1, const Rational& mu);

// w^2 -> w^2 + (sum_{l=1}^{m-1} (m-l)/(l^2 - w^2))^{-1} for 0 <= w^2 < 1.
Rational w_sq_iterate(int m, const Rational& w_sq);

// Interval transport of the same step; the map is monotone increasing in
// w^2, so endpoint images bound the true image.  grid_bits > 0 coarsens
// the enclosure outward once denominators exceed the grid.
RatInterval w_sq_iterate_interval(int m, const RatInterval& w_sq, unsigned grid_bits);

// v -> v - {(m-1)/v + sum_{l=2}^{m-1} (m-l)/(l^2-1+v)}^{-1}, v_0 = 1.
Rational v_iterate(int m, const Rational& v);
RatInterval v_iterate_interval(int m, const RatInterval& v, unsigned grid_bits);

// B(m) = sum_{l=2}^{m-1} ((m-l)/(m-1)) / (l^2-1); strictly increasing to 3/4.
Rational B_of_m(int m);

// A(m) = (m-1)/((m-1)^2 + m(m-2) B(m)), in (0, 1).
Rational A_of_m(int m);

// Runs the v-recurrence `steps` times with certified enclosures, checks
// the two-sided geometric sandwich at every step (reported, not thrown:
// the upper branch is known to fail for small k at m = 4), and encloses
// the iteration-count window for accuracy delta.
RateReport rate_report(int m, const Rational& delta, int steps);

// Exact check of w_k^2(m+1) < w_k^2(m), decided through enclosures.
bool monotone_in_m_check(int m, int k);

} // namespace exspec
