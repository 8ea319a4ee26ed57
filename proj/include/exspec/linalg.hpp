#pragma once

#include "exspec/dense.hpp"

namespace exspec {

/*
 * Exact dense linear algebra over Rational, all routines built on
 * fraction-free (Bareiss) elimination of a row-scaled integer copy.
 * Intermediate entries are then minors of the scaled matrix, which keeps
 * coefficient growth polynomial instead of the gcd-thrash of naive
 * rational Gaussian elimination.
 */

// Exact determinant; throws NotSquare.
Rational det_exact(const ExactMatrix& m);

// Rank over Q by full row reduction with row and column pivoting.
// Leading principal minors are never trusted here: deflated moment
// sequences have sign-indefinite weights, so a leading minor may vanish
// while the rank is larger.
int rank_exact(const ExactMatrix& m);

// Solves m*x = b for square nonsingular m; throws NotSquare / Singular.
ExactVector solve_exact(const ExactMatrix& m, const ExactVector& b);

} // namespace exspec
