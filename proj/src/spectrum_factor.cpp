#include "exspec/spectrum_factor.hpp"

#include "exspec/errors.hpp"

namespace exspec {

Polynomial bordered_hankel_poly(const std::vector<Rational>& values, int k) {
    if (k < 1)
        throw invalid_input("InsufficientMoments", "bordered polynomial needs order >= 1");
    if (values.size() < static_cast<std::size_t>(2 * k))
        throw invalid_input("InsufficientMoments", "bordered polynomial of order " +
                                                       std::to_string(k) + " needs 2k moments");
    // Expand along the bottom row (1, x, ..., x^k): the x^{j} coefficient is
    // the signed minor obtained by deleting column j+1.
    ExactMatrix top(k, k + 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= k; ++j) top(i, j) = values[static_cast<std::size_t>(i + j)];

    std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
    ExactMatrix minor(k, k);
    for (int j = 0; j <= k; ++j) {
        int c = 0;
        for (int col = 0; col <= k; ++col) {
            if (col == j) continue;
            minor.col(c++) = top.col(col);
        }
        Rational det = det_exact(minor);
        coeffs[static_cast<std::size_t>(j)] = ((k + j) & 1) ? -det : det;
    }
    const Rational& dk = coeffs.back(); // minor with the x^k column removed is D_k
    if (dk.is_zero())
        throw internal_error("SingularHankel",
                             "leading Hankel block of order " + std::to_string(k) + " is singular");
    Rational inv = dk.reciprocal();
    for (Rational& c : coeffs) c *= inv;
    return Polynomial(std::move(coeffs));
}

Polynomial minimal_polynomial(const MomentSeq& t, int m) {
    return bordered_hankel_poly(t.values, m);
}

Rational multiplicity_of_root(const MomentSeq& t, int m, const Rational& p) {
    Polynomial pm = minimal_polynomial(t, m);
    if (!pm(p).is_zero())
        throw invalid_input("NotARoot", p.str() + " is not a root of the minimal polynomial");
    ExactMatrix h = build_hankel(t, m);
    ExactVector pv(m);
    Rational x(1);
    for (int k = 0; k < m; ++k) {
        pv(k) = x;
        x *= p;
    }
    ExactVector y = solve_exact(h, pv);
    Rational r_inv(0);
    for (int k = 0; k < m; ++k) r_inv += pv(k) * y(k);
    if (r_inv.sign() <= 0)
        throw internal_error("NonIntegerMultiplicity", "nonpositive reciprocal multiplicity");
    Rational r = r_inv.reciprocal();
    if (!r.is_integer())
        throw internal_error("NonIntegerMultiplicity",
                             "multiplicity " + r.str() + " is not an integer");
    return r;
}

MomentSeq deflated_moments(const MomentSeq& t, const MomentSeq& s, long q) {
    if (t.size() != s.size())
        throw invalid_input("LengthMismatch", "deflation needs equally long sequences");
    if (q < 1)
        throw invalid_input("LengthMismatch", "deflation weight must be >= 1");
    MomentSeq out;
    out.source_degree = t.source_degree - q * s.source_degree;
    out.values.resize(t.size());
    const Rational qq(q);
    for (std::size_t k = 0; k < t.size(); ++k) out.values[k] = t[k] - qq * s[k];
    return out;
}

MultiplicitySpectrum multiplicity_spectrum(const Polynomial& cp) {
    if (!cp.is_monic())
        throw invalid_input("NotMonic", "characteristic polynomial must be monic");
    const long n = cp.degree();
    if (n < 1)
        throw invalid_input("InvalidInput", "characteristic polynomial must have degree >= 1");

    const std::size_t len = static_cast<std::size_t>(2 * n) + 1;
    MomentSeq t = power_sums_from_coeffs(cp, len);
    HankelLadder ladder = hankel_ladder(t, static_cast<int>(n));
    if (!ladder.valid_real)
        throw invalid_input("NotRealRooted", "Hankel ladder pattern broken at D_" +
                                                 std::to_string(ladder.first_invalid) +
                                                 ": input has non-real roots");
    const int m = ladder.m;

    MultiplicitySpectrum spec;
    spec.n = n;
    spec.m = m;
    spec.min_poly = minimal_polynomial(t, m);
    MomentSeq s = power_sums_from_coeffs(spec.min_poly, len);

    for (long q = 1; q <= n - m + 1; ++q) {
        MomentSeq u = deflated_moments(t, s, q);
        int mq = rank_exact(build_hankel(u, m));
        long nq = m - mq;
        if (nq == 0) continue;
        MultiplicityGroup g;
        g.multiplicity = q;
        g.count = nq;
        if (nq == static_cast<long>(m)) {
            g.factor = spec.min_poly; // every root shares multiplicity q
        } else {
            Polynomial aux = bordered_hankel_poly(u.values, mq);
            g.factor = poly_div_exact(spec.min_poly, aux);
        }
        spec.groups.push_back(std::move(g));
    }

    long sum_n = 0, sum_nq = 0;
    Polynomial product = Polynomial::constant(Rational(1));
    for (const MultiplicityGroup& g : spec.groups) {
        sum_n += g.count;
        sum_nq += g.count * g.multiplicity;
        for (long i = 0; i < g.multiplicity; ++i) product *= g.factor;
    }
    if (sum_n != m || sum_nq != n || product != cp)
        throw internal_error("ReconstructionFailure",
                             "factor product does not reconstruct the characteristic polynomial");
    return spec;
}

SyzygyReport syzygy_check(const Polynomial& cp, const MultiplicitySpectrum& spectrum) {
    const std::size_t len = static_cast<std::size_t>(2 * spectrum.n) + 1;
    MomentSeq t = power_sums_from_coeffs(cp, len);
    MomentSeq s = power_sums_from_coeffs(spectrum.min_poly, len);
    const int m = static_cast<int>(spectrum.m);

    SyzygyReport report;
    for (const MultiplicityGroup& g : spectrum.groups) {
        MomentSeq u = deflated_moments(t, s, g.multiplicity);
        for (int k = m - static_cast<int>(g.count) + 1; k <= m; ++k) {
            SyzygyCheck chk;
            chk.multiplicity = g.multiplicity;
            chk.order = k;
            chk.vanished = det_exact(build_hankel(u, k)).is_zero();
            if (!chk.vanished)
                throw internal_error("SyzygyViolation",
                                     "det H_" + std::to_string(k) + " of the q=" +
                                         std::to_string(g.multiplicity) +
                                         " deflation did not vanish");
            report.checks.push_back(chk);
        }
        report.syzygy_count += g.count - 1;
    }
    report.expected = spectrum.m - static_cast<long>(spectrum.groups.size());
    report.ok = report.syzygy_count == report.expected;
    if (!report.ok)
        throw internal_error("SyzygyViolation", "syzygy count does not equal m - l");
    return report;
}

} // namespace exspec
