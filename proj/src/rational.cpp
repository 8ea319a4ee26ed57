#include "exspec/rational.hpp"

#include <cctype>
#include <ostream>

namespace exspec {

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0)
        throw invalid_input("ZeroDenominator", "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw internal_error("DivisionByZero", "exact division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw internal_error("DivisionByZero", "reciprocal of zero");
    Rational r;
    mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Int Rational::ceil() const {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::round_down(unsigned bits) const {
    Int scaled = num() << bits;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den().get_mpz_t());
    return Rational(q, Int(1) << bits);
}

Rational Rational::round_up(unsigned bits) const {
    Int scaled = num() << bits;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den().get_mpz_t());
    return Rational(q, Int(1) << bits);
}

namespace {

bool parse_decimal(std::string_view text, Rational& out) {
    // [-+]?digits[.digits][e[-+]digits]
    std::string mantissa;
    long exp10 = 0;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) mantissa += text[i++];
    bool any_digit = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        mantissa += text[i];
        any_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            mantissa += text[i];
            --exp10;
            any_digit = true;
        }
    }
    if (!any_digit) return false;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
        if (i == text.size()) return false;
        long e = 0;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            e = e * 10 + (text[i] - '0');
            if (e > 1000000) return false;
        }
        exp10 += neg ? -e : e;
    }
    if (i != text.size()) return false;
    Int n(mantissa, 10);
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0) {
        out = Rational(n, p10);
    } else {
        Int scaled = n * p10;
        out = Rational(scaled);
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    auto bad = [&] {
        return invalid_input("ParseError", "cannot parse rational: '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::string ns(text.substr(0, slash)), ds(text.substr(slash + 1));
        if (ns.empty() || ds.empty()) throw bad();
        Int n, d;
        if (mpz_set_str(n.get_mpz_t(), ns.c_str(), 10) != 0) throw bad();
        if (mpz_set_str(d.get_mpz_t(), ds.c_str(), 10) != 0) throw bad();
        if (sgn(d) == 0) throw bad();
        return Rational(n, d);
    }
    Rational r;
    if (!parse_decimal(text, r)) throw bad();
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = e < 0 ? base.reciprocal() : base;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Int pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), b.num().get_mpz_t(), n);
    mpz_pow_ui(pd.get_mpz_t(), b.den().get_mpz_t(), n);
    return Rational(pn, pd);
}

Int ceil_sqrt(const Rational& q) {
    if (q.sign() < 0)
        throw internal_error("NegativeSqrt", "square root of negative rational");
    // c = ceil(sqrt(num/den)): start from isqrt(ceil(num/den)) and adjust.
    Int t;
    mpz_cdiv_q(t.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    Int c;
    mpz_sqrt(c.get_mpz_t(), t.get_mpz_t());
    while (c * c * q.den() < q.num()) ++c;
    while (c > 0 && (c - 1) * (c - 1) * q.den() >= q.num()) --c;
    return c;
}

bool is_perfect_square(const Rational& q, Rational* root) {
    if (q.sign() < 0) return false;
    if (!mpz_perfect_square_p(q.num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.den().get_mpz_t()))
        return false;
    if (root) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), q.num().get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), q.den().get_mpz_t());
        *root = Rational(rn, rd);
    }
    return true;
}

Rational sqrt_lower_bound(const Rational& q, unsigned bits) {
    if (q.sign() < 0)
        throw internal_error("NegativeSqrt", "square root of negative rational");
    Rational exact;
    if (is_perfect_square(q, &exact)) return exact;
    // floor(sqrt(num*den*4^bits)) / (den*2^bits) squares to <= q.
    Int scaled = q.num() * q.den();
    scaled <<= 2 * bits;
    Int s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    return Rational(s, q.den() << bits);
}

Rational sqrt_upper_bound(const Rational& q, unsigned bits) {
    if (q.sign() < 0)
        throw internal_error("NegativeSqrt", "square root of negative rational");
    Rational exact;
    if (is_perfect_square(q, &exact)) return exact;
    Int scaled = q.num() * q.den();
    scaled <<= 2 * bits;
    Int s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    return Rational(s + 1, q.den() << bits);
}

} // namespace exspec
