#pragma once

#include "exspec/polynomial.hpp"

namespace exspec {

// Res_x(p, q) over Q, by the Euclidean remainder sequence with the
// standard multiplier bookkeeping.
Rational resultant(const Polynomial& p, const Polynomial& q);

// R(z) = Res_x(p(x), q(x + z)), a polynomial in the shift z, recovered
// exactly by evaluating the numeric resultant at deg(p)*deg(q)+1 integer
// shifts and interpolating.  R vanishes precisely at the root differences:
// for monic inputs R(z) = prod_{i,j} (alpha_i - beta_j + z).
Polynomial shift_resultant(const Polynomial& p, const Polynomial& q);

// Exact polynomial interpolation through (node, value) pairs with
// pairwise-distinct nodes (Newton divided differences).
Polynomial interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

} // namespace exspec
