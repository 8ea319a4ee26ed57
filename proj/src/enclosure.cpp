#include "exspec/enclosure.hpp"

#include "exspec/errors.hpp"

namespace exspec {

RatInterval add(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RatInterval sub(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RatInterval mul_positive(const RatInterval& a, const RatInterval& b) {
    if (a.lo.sign() <= 0 || b.lo.sign() <= 0)
        throw internal_error("IntervalSign", "mul_positive needs strictly positive intervals");
    return {a.lo * b.lo, a.hi * b.hi};
}

RatInterval scale(const RatInterval& a, long k) {
    Rational f(k);
    if (k >= 0) return {f * a.lo, f * a.hi};
    return {f * a.hi, f * a.lo};
}

RatInterval reciprocal_positive(const RatInterval& a) {
    if (a.lo.sign() <= 0)
        throw internal_error("IntervalSign", "reciprocal of a non-positive interval");
    return {a.hi.reciprocal(), a.lo.reciprocal()};
}

namespace {

// 2*atanh(u) = ln((1+u)/(1-u)) for 0 <= u < 1; partial sum plus a
// geometric tail bound gives a certified enclosure.
RatInterval two_atanh(const Rational& u, int terms) {
    Rational sum(0);
    Rational u2 = u * u;
    Rational p = u;
    long k = 0;
    for (int i = 0; i < terms; ++i) {
        sum += p / Rational(2 * k + 1);
        p *= u2;
        ++k;
    }
    // Remainder: sum_{j>=k} u^{2j+1}/(2j+1) <= u^{2k+1} / ((2k+1)(1-u^2)).
    Rational tail = p / (Rational(2 * k + 1) * (Rational(1) - u2));
    return {Rational(2) * sum, Rational(2) * (sum + tail)};
}

RatInterval ln2_interval(int terms) { return two_atanh(Rational(Int(1), Int(3)), terms); }

} // namespace

RatInterval ln_interval(const Rational& x, int terms) {
    if (x.sign() <= 0)
        throw invalid_input("LogDomain", "ln of a non-positive rational");
    Rational y = x;
    long e2 = 0;
    const Rational two(2), one(1), half(Int(1), Int(2));
    while (y >= two) {
        y = y * half;
        ++e2;
    }
    while (y < one) {
        y = y * two;
        --e2;
    }
    RatInterval lny = two_atanh((y - one) / (y + one), terms);
    if (e2 == 0) return lny;
    return add(lny, scale(ln2_interval(terms), e2));
}

RatInterval exp_interval(const Rational& x, int terms) {
    // Split x = n + r with |r| <= 1/2, so the series tail is tame.
    Int n = (x + Rational(Int(1), Int(2))).floor();
    Rational r = x - Rational(n);

    Rational sum(1), p(1);
    for (int k = 1; k <= terms; ++k) {
        p *= r / Rational(static_cast<long>(k));
        sum += p;
    }
    // |tail| <= |r|^{terms+1}/(terms+1)! * 2 for |r| <= 1/2.
    Rational tail = Rational(2) * (p.abs() * r.abs()) / Rational(static_cast<long>(terms) + 1);
    RatInterval er{sum - tail, sum + tail};
    if (er.lo.sign() <= 0)
        throw internal_error("IntervalSign", "exp enclosure collapsed; raise terms");

    if (n == 0) return er;

    // e itself, then an exact interval power.
    Rational esum(1), ep(1);
    for (int k = 1; k <= terms; ++k) {
        ep /= Rational(static_cast<long>(k));
        esum += ep;
    }
    Rational etail = Rational(2) * ep / Rational(static_cast<long>(terms) + 1);
    RatInterval e1{esum, esum + etail};

    bool invert = n < 0;
    unsigned long reps = static_cast<unsigned long>(invert ? -n.get_si() : n.get_si());
    RatInterval en{Rational(1), Rational(1)};
    for (unsigned long i = 0; i < reps; ++i) en = mul_positive(en, e1);
    if (invert) en = reciprocal_positive(en);
    return mul_positive(en, er);
}

} // namespace exspec
