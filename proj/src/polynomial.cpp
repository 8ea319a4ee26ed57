#include "exspec/polynomial.hpp"

#include <ostream>

#include "exspec/errors.hpp"

namespace exspec {

void Polynomial::trim() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
    Polynomial p = constant(Rational(1));
    for (const Rational& r : roots) p *= linear_root(r);
    return p;
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        acc *= x;
        acc += coeffs_[k];
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return zero();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (leading().is_zero())
        throw internal_error("ZeroLeading", "cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    Rational inv = leading().reciprocal();
    std::vector<Rational> c = coeffs_;
    for (Rational& x : c) x *= inv;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted(const Rational& c) const {
    // Repeated synthetic division by (x - (-c)) yields the Taylor
    // coefficients of p(x + c) in place.
    std::vector<Rational> a = coeffs_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k > i; --k) a[k - 1] += c * a[k];
    return Polynomial(std::move(a));
}

Polynomial Polynomial::even_part_in_square() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
        if (!coeffs_[k].is_zero())
            throw internal_error("OddPartNonzero", "polynomial expected to be even in its variable");
    std::vector<Rational> c((coeffs_.size() + 1) / 2);
    for (std::size_t k = 0; k < coeffs_.size(); k += 2) c[k / 2] = coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (Rational& x : c) x = -x;
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial::zero();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c = p.coeffs_;
    for (Rational& x : c) x *= s;
    return Polynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    os << "[";
    for (int k = 0; k <= p.degree(); ++k) {
        if (k) os << ", ";
        os << p.coeff(k);
    }
    return os << "]";
}

Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero())
        throw internal_error("DivisionByZero", "polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial::zero(), num};
    std::vector<Rational> r = num.coeffs();
    const int dn = num.degree(), dd = den.degree();
    std::vector<Rational> q(static_cast<std::size_t>(dn - dd) + 1, Rational(0));
    const Rational lead_inv = den.leading().reciprocal();
    for (int k = dn - dd; k >= 0; --k) {
        Rational f = r[static_cast<std::size_t>(k + dd)] * lead_inv;
        if (f.is_zero()) continue;
        q[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(k + j)] -= f * den.coeff(j);
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial poly_div_exact(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = poly_divmod(num, den);
    if (!r.is_zero())
        throw internal_error("NonzeroRemainder",
                             "polynomial division expected to be exact has a remainder");
    return q;
}

} // namespace exspec
