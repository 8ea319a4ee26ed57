#pragma once

#include <optional>
#include <utility>

#include "exspec/moments.hpp"
#include "exspec/polynomial.hpp"

namespace exspec {

/*
 * Certified monotone iterations for spectral bounds.  Both iterations are
 * exact Newton steps taken from outside the extreme root of a real-rooted
 * polynomial: of the squared-difference polynomial G for the minimal gap,
 * of the minimal polynomial itself for the extreme eigenvalues.  Monotone
 * convergence then follows from convexity outside the root hull; every
 * iterate is a rational function of the input coefficients and remains a
 * valid bound no matter where the iteration stops.
 */

struct GapIteration {
    std::vector<Rational> eps_sq; // strictly increasing, starts at 0, every entry < mu^2
    bool converged = false;
    bool exact_hit = false; // last entry equals mu^2 exactly
    Rational certified_lower;
    bool lower_is_exact = false; // certified_lower^2 == eps_sq.back()
    Polynomial gap_poly;         // monic, roots (p_i - p_j)^2 over distinct pairs
    int iterations = 0;
};

enum class Side { Min, Max };

struct ExtremalIteration {
    Side side = Side::Min;
    std::vector<Rational> values; // c_0 from the coarse outer bound, then Newton iterates
    Rational certified_bound;
    bool converged = false;
    bool exact_hit = false;
    int iterations = 0;
};

struct IterationControl {
    // Absolute step threshold on the iterated quantity (eps^2 for the gap
    // iteration, the bound itself for the extremal ones); <= 0 disables.
    Rational tol;
    // Alternative relative rule: stop once step < rel_step * value.
    std::optional<Rational> rel_step;
    int max_iter = 64;
    // Exact Newton squares the representation size each step, so iterates
    // are capped to a bounded denominator, always rounding in the
    // conservative direction for the sequence at hand.
    bool round = true;
    unsigned round_trigger_bits = 213; // ~10^64
    unsigned round_grid_bits = 212;
};

// Monic G of degree m(m-1)/2 whose roots are the squared root differences
// of a square-free pm: built from Res_x(pm(x), pm(x+z)) by stripping the
// z^m factor and substituting y = z^2.
Polynomial squared_difference_poly(const Polynomial& pm);

// One gap step: eps^2 + (sum over pairs 1/((p_i-p_j)^2 - eps^2))^{-1},
// evaluated as eps^2 - G(eps^2)/G'(eps^2) through the logarithmic
// derivative.  Returns eps_sq unchanged when G(eps_sq) = 0 (the limit hit).
Rational gap_iterate(const Polynomial& gap_poly, const Rational& eps_sq);

GapIteration run_gap_iteration(const Polynomial& gap_poly, const IterationControl& control);

// Full pipeline from a characteristic polynomial: moments, ladder,
// minimal polynomial, G, iteration from eps_0^2 = 0 until the squared
// step drops below tol^2.
GapIteration min_gap(const Polynomial& cp, const Rational& tol, int max_iter = 0);

// Coarse outer bracket (low, high) around all roots of pm: mean -/+ the
// integer ceiling of sqrt(sum of squared root differences); degree 1
// degenerates to mean -/+ 1.
std::pair<Rational, Rational> initial_outer_bounds(const Polynomial& pm);

// One extremal step: c + (sum_i 1/(p_i - c))^{-1} = c - pm(c)/pm'(c).
Rational extremal_iterate(const Polynomial& pm, const Rational& c);

ExtremalIteration run_extremal_iteration(const Polynomial& pm, Side side,
                                         const IterationControl& control);

ExtremalIteration extremal_bound(const Polynomial& pm, Side side, const Rational& tol,
                                 int max_iter = 64);

// Default iteration budget: twice the worst-case (7/4)(m-1) ln(1/tol)
// count of the slowest (equidistant) spectrum.
int default_gap_max_iter(int m, const Rational& tol);

} // namespace exspec
