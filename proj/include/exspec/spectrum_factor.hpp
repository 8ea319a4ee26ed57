#pragma once

#include "exspec/hankel.hpp"

namespace exspec {

/*
 * Same-multiplicity factorization of a real-rooted characteristic
 * polynomial: every eigenvalue of multiplicity q_alpha is collected in
 * one square-free factor, all coefficients exact rationals of the input
 * coefficients.
 */
struct MultiplicityGroup {
    long multiplicity = 0; // q_alpha
    long count = 0;        // n_alpha = number of distinct roots in the class
    Polynomial factor;     // monic, degree n_alpha
};

struct MultiplicitySpectrum {
    long n = 0; // degree of the characteristic polynomial
    long m = 0; // number of distinct roots
    std::vector<MultiplicityGroup> groups;
    Polynomial min_poly; // monic, degree m
};

struct SyzygyCheck {
    long multiplicity = 0;
    int order = 0; // Hankel order whose determinant must vanish
    bool vanished = false;
};

struct SyzygyReport {
    std::vector<SyzygyCheck> checks;
    long syzygy_count = 0; // sum over groups of (n_alpha - 1)
    long expected = 0;     // m - l
    bool ok = false;
};

// Monic polynomial of degree k read off the order-(k+1) bordered Hankel
// determinant of `values`, divided by D_k.  Throws SingularHankel when
// D_k = 0.  With k = m and CP power sums this is the minimal polynomial.
Polynomial bordered_hankel_poly(const std::vector<Rational>& values, int k);

Polynomial minimal_polynomial(const MomentSeq& t, int m);

// Multiplicity of an eigenvalue p from the quadratic form of the inverse
// moment Hankel matrix; exposed mostly so the identity it rests on can be
// exercised directly.  The factorization pipeline never needs root values.
Rational multiplicity_of_root(const MomentSeq& t, int m, const Rational& p);

// t_k - q*s_k: removes weight q from every root; roots of multiplicity
// exactly q get weight zero and drop out of the Hankel rank.
MomentSeq deflated_moments(const MomentSeq& t, const MomentSeq& s, long q);

MultiplicitySpectrum multiplicity_spectrum(const Polynomial& cp);

// Verifies the forced determinant vanishings for every multiplicity class
// and counts the independent syzygies (m - l of them).
SyzygyReport syzygy_check(const Polynomial& cp, const MultiplicitySpectrum& spectrum);

} // namespace exspec
