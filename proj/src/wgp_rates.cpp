#include "exspec/wgp_rates.hpp"

#include "exspec/errors.hpp"

namespace exspec {

namespace {

void check_m(int m) {
    if (m < 3) throw invalid_input("BadParams", "rate machinery needs m >= 3");
}

Rational coarsen_down(const Rational& x, unsigned grid_bits) {
    if (grid_bits == 0 || x.den_bits() <= grid_bits + 1) return x;
    return x.round_down(grid_bits);
}

Rational coarsen_up(const Rational& x, unsigned grid_bits) {
    if (grid_bits == 0 || x.den_bits() <= grid_bits + 1) return x;
    return x.round_up(grid_bits);
}

} // namespace

Polynomial wgp_poly(int m, const Rational& p1, const Rational& mu) {
    check_m(m);
    if (mu.sign() <= 0) throw invalid_input("BadParams", "equidistant step mu must be positive");
    std::vector<Rational> roots;
    roots.reserve(static_cast<std::size_t>(m));
    for (int l = 0; l < m; ++l) roots.push_back(p1 + Rational(l) * mu);
    return Polynomial::from_roots(roots);
}

Rational w_sq_iterate(int m, const Rational& w_sq) {
    check_m(m);
    if (w_sq.sign() < 0 || w_sq >= Rational(1))
        throw invalid_input("BadParams", "w^2 must lie in [0, 1)");
    Rational s(0);
    for (long l = 1; l < m; ++l)
        s += Rational(m - l) / (Rational(l * l) - w_sq);
    return w_sq + s.reciprocal();
}

RatInterval w_sq_iterate_interval(int m, const RatInterval& w_sq, unsigned grid_bits) {
    return {coarsen_down(w_sq_iterate(m, w_sq.lo), grid_bits),
            coarsen_up(w_sq_iterate(m, w_sq.hi), grid_bits)};
}

Rational v_iterate(int m, const Rational& v) {
    check_m(m);
    if (v.sign() <= 0 || v > Rational(1))
        throw invalid_input("BadParams", "v must lie in (0, 1]");
    Rational s = Rational(m - 1) / v;
    for (long l = 2; l < m; ++l)
        s += Rational(m - l) / (Rational(l * l - 1) + v);
    return v - s.reciprocal();
}

RatInterval v_iterate_interval(int m, const RatInterval& v, unsigned grid_bits) {
    return {coarsen_down(v_iterate(m, v.lo), grid_bits),
            coarsen_up(v_iterate(m, v.hi), grid_bits)};
}

Rational B_of_m(int m) {
    check_m(m);
    Rational b(0);
    const Rational inv_m1 = Rational(m - 1).reciprocal();
    for (long l = 2; l < m; ++l)
        b += Rational(m - l) * inv_m1 / Rational(l * l - 1);
    return b;
}

Rational A_of_m(int m) {
    check_m(m);
    Rational m1(m - 1);
    return m1 / (m1 * m1 + Rational(m) * Rational(m - 2) * B_of_m(m));
}

RateReport rate_report(int m, const Rational& delta, int steps) {
    check_m(m);
    if (delta.sign() <= 0 || delta >= Rational(1))
        throw invalid_input("BadParams", "delta must lie in (0, 1)");
    if (steps < 0) throw invalid_input("BadParams", "steps must be >= 0");

    RateReport report;
    report.m = m;
    report.B = B_of_m(m);
    report.A = A_of_m(m);
    report.lower_geo = Rational(m - 2) / Rational(m - 1);
    report.upper_geo = Rational(1) - report.A;

    const unsigned grid = 320;
    RatInterval v{Rational(1), Rational(1)};
    report.v_lower.push_back(v.lo);
    report.v_upper.push_back(v.hi);
    Rational lower_pow(1), upper_pow(1);
    for (int k = 1; k <= steps; ++k) {
        v = v_iterate_interval(m, v, grid);
        report.v_lower.push_back(v.lo);
        report.v_upper.push_back(v.hi);
        lower_pow *= report.lower_geo;
        upper_pow *= report.upper_geo;
        SandwichStatus st;
        st.k = k;
        if (lower_pow < v.lo && v.hi <= upper_pow)
            st.state = SandwichState::Holds;
        else if (v.hi <= lower_pow || v.lo > upper_pow)
            st.state = SandwichState::Violated;
        else
            st.state = SandwichState::Undecided;
        report.sandwich.push_back(st);
    }

    // Window bounds ln(1/delta)/ln((m-1)/(m-2)) and ln(1/delta)/ln(1/(1-A)),
    // rounded outward so the reported window always contains the true one.
    RatInterval lnd = ln_interval(delta.reciprocal());
    RatInterval lr = ln_interval(Rational(m - 1) / Rational(m - 2));
    RatInterval lu = ln_interval(report.upper_geo.reciprocal());
    report.k_min = (lnd.lo / lr.hi).floor().get_si();
    report.k_max = (lnd.hi / lu.lo).ceil().get_si();
    return report;
}

bool monotone_in_m_check(int m, int k) {
    check_m(m);
    if (k < 1) throw invalid_input("BadParams", "monotonicity check needs k >= 1");
    for (unsigned grid : {320u, 1024u, 4096u}) {
        RatInterval wm{Rational(0), Rational(0)}, wm1{Rational(0), Rational(0)};
        for (int i = 0; i < k; ++i) {
            wm = w_sq_iterate_interval(m, wm, grid);
            wm1 = w_sq_iterate_interval(m + 1, wm1, grid);
        }
        if (wm1.hi < wm.lo) return true;
        if (wm1.lo > wm.hi) return false;
    }
    throw internal_error("Undecided", "enclosures too wide to order the iterates");
}

} // namespace exspec
