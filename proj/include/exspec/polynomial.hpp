#pragma once

#include <initializer_list>
#include <vector>

#include "exspec/rational.hpp"

namespace exspec {

/*
 * Dense univariate polynomial over Rational, coefficients stored in
 * ascending power order (coeff(k) multiplies x^k).  The coefficient
 * array is never empty; the zero polynomial is {0} with degree 0.
 * Degrees here stay small, so dense storage is the right trade.
 */
class Polynomial {
public:
    Polynomial() : coeffs_{Rational(0)} {}
    explicit Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
        if (coeffs_.empty()) coeffs_.push_back(Rational(0));
        trim();
    }
    Polynomial(std::initializer_list<Rational> ascending)
        : Polynomial(std::vector<Rational>(ascending)) {}

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }
    // x - r
    static Polynomial linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }
    static Polynomial from_roots(const std::vector<Rational>& roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
    bool is_monic() const { return leading() == Rational(1); }

    Rational operator()(const Rational& x) const; // Horner, exact

    Polynomial derivative() const;
    Polynomial monic() const; // divide by leading coefficient

    // Taylor shift: returns p(x + c).
    Polynomial shifted(const Rational& c) const;

    // Substitute x^2 -> y on an even polynomial (odd coefficients must be 0).
    Polynomial even_part_in_square() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Rational poly_eval(const Polynomial& p, const Rational& x);
Polynomial poly_derivative(const Polynomial& p);

// Exact quotient; throws NonzeroRemainder unless den divides num in Q[x].
// A nonzero remainder signals inconsistent multiplicity detection upstream.
Polynomial poly_div_exact(const Polynomial& num, const Polynomial& den);

// Quotient and remainder of Euclidean division (den != 0).
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& num, const Polynomial& den);

} // namespace exspec
