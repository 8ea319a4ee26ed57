#include "exspec/moments.hpp"

#include "exspec/errors.hpp"

namespace exspec {

MomentSeq power_sums_from_coeffs(const Polynomial& p, std::size_t count) {
    if (!p.is_monic())
        throw invalid_input("NotMonic", "power sums require a monic polynomial");
    const long n = p.degree();
    if (n < 1)
        throw invalid_input("NotMonic", "power sums require degree >= 1");
    if (count < 1)
        throw invalid_input("LengthMismatch", "count must be >= 1");

    // e_k = (-1)^k * coeff(n-k); t_k = sum_{j<k} (-1)^{j-1} e_j t_{k-j} + (-1)^{k-1} k e_k.
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1, Rational(0));
    for (long k = 1; k <= n; ++k) {
        e[static_cast<std::size_t>(k)] = p.coeff(static_cast<int>(n - k));
        if (k & 1) e[static_cast<std::size_t>(k)] = -e[static_cast<std::size_t>(k)];
    }

    MomentSeq out;
    out.source_degree = n;
    out.values.resize(count);
    out.values[0] = Rational(n);
    for (std::size_t k = 1; k < count; ++k) {
        Rational acc(0);
        const long upto = std::min<long>(static_cast<long>(k) - 1, n);
        for (long j = 1; j <= upto; ++j) {
            Rational term = e[static_cast<std::size_t>(j)] * out.values[k - static_cast<std::size_t>(j)];
            acc += (j & 1) ? term : -term;
        }
        if (static_cast<long>(k) <= n) {
            Rational tail = Rational(static_cast<long>(k)) * e[k];
            acc += (k & 1) ? tail : -tail;
        }
        out.values[k] = acc;
    }
    return out;
}

std::vector<Rational> elementary_from_power_sums(const MomentSeq& s, long m) {
    if (m < 0 || s.size() < static_cast<std::size_t>(m) + 1)
        throw invalid_input("LengthMismatch", "need at least m+1 power sums");
    if (s[0] != Rational(m))
        throw invalid_input("LengthMismatch", "s[0] must equal the root count m");
    // k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} s_i
    std::vector<Rational> e(static_cast<std::size_t>(m) + 1, Rational(0));
    e[0] = Rational(1);
    for (long k = 1; k <= m; ++k) {
        Rational acc(0);
        for (long i = 1; i <= k; ++i) {
            Rational term = e[static_cast<std::size_t>(k - i)] * s[static_cast<std::size_t>(i)];
            acc += (i & 1) ? term : -term;
        }
        e[static_cast<std::size_t>(k)] = acc / Rational(k);
    }
    return std::vector<Rational>(e.begin() + 1, e.end());
}

Polynomial charpoly_from_traces(const MomentSeq& t, long n) {
    std::vector<Rational> sigma = elementary_from_power_sums(t, n);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(n)] = Rational(1);
    for (long k = 1; k <= n; ++k) {
        Rational c = sigma[static_cast<std::size_t>(k - 1)];
        if (k & 1) c = -c;
        coeffs[static_cast<std::size_t>(n - k)] = c;
    }
    return Polynomial(std::move(coeffs));
}

void validate_hermitian(const ComplexMatrix& h) {
    if (h.rows() != h.cols())
        throw invalid_input("NotHermitian", "matrix is not square");
    for (long i = 0; i < h.rows(); ++i)
        for (long j = i; j < h.cols(); ++j)
            if (h(i, j) != h(j, i).conj())
                throw invalid_input("NotHermitian",
                                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") is not the conjugate of its transpose");
}

MomentSeq traces_from_matrix(const ComplexMatrix& h, std::size_t count) {
    validate_hermitian(h);
    if (count < 1)
        throw invalid_input("LengthMismatch", "count must be >= 1");
    const long n = h.rows();
    MomentSeq out;
    out.source_degree = n;
    out.values.reserve(count);
    out.values.emplace_back(n);
    ComplexMatrix power = h;
    for (std::size_t k = 1; k < count; ++k) {
        ComplexRational tr;
        for (long i = 0; i < n; ++i) tr += power(i, i);
        if (!tr.is_real())
            throw internal_error("ComplexTrace", "trace of a Hermitian power must be real");
        out.values.push_back(tr.re);
        if (k + 1 < count) power = ComplexMatrix(power * h);
    }
    return out;
}

} // namespace exspec
