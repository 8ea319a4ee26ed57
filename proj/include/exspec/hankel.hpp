#pragma once

#include "exspec/linalg.hpp"
#include "exspec/moments.hpp"

namespace exspec {

/*
 * Determinant ladder D_1..D_n of the moment Hankel matrices.  For the
 * power sums of a real-rooted polynomial the ladder is strictly positive
 * up to the number m of distinct roots and identically zero beyond, so m
 * can be read off directly; any other sign pattern certifies that the
 * input has non-real roots.
 */
struct HankelLadder {
    std::vector<Rational> dets; // dets[k-1] = D_k
    int m = 0;                  // distinct roots when valid_real
    bool valid_real = false;
    int first_invalid = 0; // 1-based offending index when !valid_real
};

// [t_{i+j-2}] for i,j = 1..k; throws InsufficientMoments.
ExactMatrix build_hankel(const MomentSeq& t, int k);

// Hankel matrix of order k read from a raw value vector (deflated
// sequences reuse this without re-wrapping).
ExactMatrix build_hankel(const std::vector<Rational>& values, int k);

HankelLadder hankel_ladder(const MomentSeq& t, int n);

// Bordered Hankel determinant of order k+1 with last row (1, x, .., x^k);
// the k = m case factors as D_m * P_m(x).  H_0 = 1 by convention so the
// sign-variation sequence below always starts with the leading one.
Rational hankel_polynomial(const MomentSeq& t, int k, const Rational& x);

// Distinct roots in ]a, b[ by sign variations of the bordered-determinant
// sequence at the two endpoints.  Throws ConsecutiveZeros when the
// hypothesis fails at an endpoint; callers perturb and retry.
int count_roots_in_interval(const MomentSeq& t, int m, const Rational& a, const Rational& b);

} // namespace exspec
