#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "exspec/errors.hpp"

namespace exspec {

using Int = mpz_class;

/*
 * Arbitrary-precision rational, the only scalar of the math core.
 *
 * Invariants: denominator > 0, gcd(|num|, den) = 1.  Both are maintained
 * by mpq_class; construction from raw numerator/denominator canonicalizes.
 * Plain value semantics, no expression templates leak out.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "n", "n/d" or a decimal like "1.5e-3"; throws ParseError.
    static Rational parse(std::string_view text);

    const Int& num() const { return v_.get_num(); }
    const Int& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Canonical lossless form: "num" when integral, else "num/den".
    std::string str() const;

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational reciprocal() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Int floor() const;
    Int ceil() const;

    // Largest grid point k/2^bits <= *this (round_down), resp. smallest >= (round_up).
    Rational round_down(unsigned bits) const;
    Rational round_up(unsigned bits) const;

    // Bit length of the denominator; cheap size probe for rounding policies.
    std::size_t den_bits() const { return mpz_sizeinbase(v_.get_den().get_mpz_t(), 2); }

    double to_double() const { return v_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

Rational pow_int(const Rational& base, long e);

// Smallest integer c >= sqrt(q); q must be >= 0.
Int ceil_sqrt(const Rational& q);

// Rational lower/upper bounds on sqrt(q) with ~2^-bits relative slack.
// If q is a perfect rational square the exact root is returned by both.
Rational sqrt_lower_bound(const Rational& q, unsigned bits);
Rational sqrt_upper_bound(const Rational& q, unsigned bits);

bool is_perfect_square(const Rational& q, Rational* root = nullptr);

} // namespace exspec
