#pragma once

#include "exspec/rational.hpp"

namespace exspec {

// Closed rational interval certified to contain a (possibly irrational)
// real value.  Everything that is not a rational function of the input
// coefficients travels through these.
struct RatInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational width() const { return hi - lo; }

    // Trims representation size; containment is preserved by rounding
    // outward on both ends.
    RatInterval coarsened(unsigned bits) const { return {lo.round_down(bits), hi.round_up(bits)}; }
};

RatInterval add(const RatInterval& a, const RatInterval& b);
RatInterval sub(const RatInterval& a, const RatInterval& b);
RatInterval mul_positive(const RatInterval& a, const RatInterval& b); // both ends > 0
RatInterval scale(const RatInterval& a, long k);                      // k * a
RatInterval reciprocal_positive(const RatInterval& a);

// Enclosure of ln(x) for rational x > 0 via the atanh series after
// scaling into [1, 2); `terms` trades width for work.
RatInterval ln_interval(const Rational& x, int terms = 24);

// Enclosure of exp(x) for rational x, |x| modest (argument is split into
// an integer part and a small remainder).
RatInterval exp_interval(const Rational& x, int terms = 24);

} // namespace exspec
