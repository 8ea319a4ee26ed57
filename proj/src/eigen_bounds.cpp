#include "exspec/eigen_bounds.hpp"

#include <cmath>

#include "exspec/enclosure.hpp"
#include "exspec/errors.hpp"
#include "exspec/hankel.hpp"
#include "exspec/resultant.hpp"
#include "exspec/spectrum_factor.hpp"

namespace exspec {

namespace {

Polynomial poly_gcd_monic(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        throw internal_error("ZeroGcd", "gcd of two zero polynomials");
    return a.degree() == 0 ? Polynomial::constant(Rational(1)) : a.monic();
}

// Yun square-free decomposition of a monic polynomial: p = prod parts^mult.
std::vector<std::pair<Polynomial, long>> square_free_parts(const Polynomial& p) {
    Polynomial P = p.monic();
    if (P.degree() < 1) return {};
    Polynomial g = poly_gcd_monic(P, P.derivative());
    if (g.degree() == 0) return {{P, 1}};
    Polynomial c = poly_div_exact(P, g);
    Polynomial d = poly_div_exact(P.derivative(), g) - c.derivative();
    std::vector<std::pair<Polynomial, long>> parts;
    long i = 1;
    while (c.degree() > 0) {
        Polynomial a = poly_gcd_monic(c, d);
        if (a.degree() > 0) parts.emplace_back(a, i);
        c = poly_div_exact(c, a);
        d = poly_div_exact(d, a) - c.derivative();
        ++i;
    }
    return parts;
}

/*
 * Newton step x - g(x)/g'(x) evaluated through the square-free parts of g:
 * g'/g = sum_j mult_j * F_j'/F_j.  Working with the parts keeps the
 * intermediate integers near the size of the reduced result even when g
 * has high-multiplicity roots (the equidistant worst case), and the whole
 * step costs a single rational canonicalization.
 */
class NewtonLogDeriv {
public:
    explicit NewtonLogDeriv(const Polynomial& g) {
        for (auto& [poly, mult] : square_free_parts(g)) {
            Part part;
            part.mult = mult;
            Int l(1);
            for (const Rational& c : poly.coeffs())
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
            for (const Rational& c : poly.coeffs()) part.coeffs.push_back(c.num() * (l / c.den()));
            max_deg_ = std::max(max_deg_, poly.degree());
            parts_.push_back(std::move(part));
        }
        if (parts_.empty())
            throw internal_error("DegreeTooSmall", "Newton step on a constant polynomial");
    }

    // exact_hit is set when g(x) = 0; x is returned unchanged then.
    Rational step(const Rational& x, bool& exact_hit) const {
        const Int& a = x.num();
        const Int& b = x.den();
        std::vector<Int> ap(static_cast<std::size_t>(max_deg_) + 1), bp(ap.size());
        ap[0] = 1;
        bp[0] = 1;
        for (std::size_t i = 1; i < ap.size(); ++i) {
            ap[i] = ap[i - 1] * a;
            bp[i] = bp[i - 1] * b;
        }

        std::vector<Int> vals(parts_.size()), ders(parts_.size());
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            const auto& f = parts_[j].coeffs;
            const std::size_t d = f.size() - 1;
            Int A(0), B(0);
            for (std::size_t i = 0; i <= d; ++i) {
                A += f[i] * ap[i] * bp[d - i];
                if (i >= 1) B += static_cast<long>(i) * f[i] * ap[i - 1] * bp[d - i];
            }
            if (sgn(A) == 0) {
                exact_hit = true;
                return x;
            }
            vals[j] = std::move(A);
            ders[j] = std::move(B);
        }
        exact_hit = false;

        // g'(x)/g(x) = b * N / Delta with N = sum_j mult_j B_j prod_{k != j} A_k.
        const std::size_t np = parts_.size();
        std::vector<Int> prefix(np + 1), suffix(np + 1);
        prefix[0] = 1;
        suffix[np] = 1;
        for (std::size_t j = 0; j < np; ++j) prefix[j + 1] = prefix[j] * vals[j];
        for (std::size_t j = np; j-- > 0;) suffix[j] = suffix[j + 1] * vals[j];
        Int n(0);
        for (std::size_t j = 0; j < np; ++j)
            n += parts_[j].mult * ders[j] * prefix[j] * suffix[j + 1];
        const Int& delta = prefix[np];
        if (sgn(n) == 0)
            throw internal_error("DerivativeZero",
                                 "logarithmic derivative vanished outside the root hull");
        return Rational(a * n - delta, b * n);
    }

private:
    struct Part {
        std::vector<Int> coeffs;
        long mult = 0;
    };
    std::vector<Part> parts_;
    int max_deg_ = 0;
};

Rational conservative_round(const Rational& next, const Rational& step_size, bool down,
                            const IterationControl& control) {
    if (!control.round || next.den_bits() <= control.round_trigger_bits) return next;
    Rational r = down ? next.round_down(control.round_grid_bits)
                      : next.round_up(control.round_grid_bits);
    // Keep at least half of the exact progress so monotonicity survives.
    Rational loss = down ? next - r : r - next;
    if (loss + loss < step_size) return r;
    return next;
}

bool step_small_enough(const Rational& step, const Rational& value,
                       const IterationControl& control) {
    if (control.tol.sign() > 0 && step < control.tol) return true;
    if (control.rel_step && step < *control.rel_step * value.abs()) return true;
    return false;
}

} // namespace

Polynomial squared_difference_poly(const Polynomial& pm) {
    const int m = pm.degree();
    if (m < 2)
        throw invalid_input("DegreeTooSmall",
                            "squared-difference polynomial needs degree >= 2");
    Polynomial r = shift_resultant(pm.monic(), pm.monic());
    // prod over ordered root pairs of (z + p_i - p_j): diagonal pairs
    // contribute z^m exactly, and nothing more iff pm is square-free.
    for (int k = 0; k < m; ++k)
        if (!r.coeff(k).is_zero())
            throw internal_error("BadValuation", "resultant valuation below the root count");
    std::vector<Rational> stripped(r.coeffs().begin() + m, r.coeffs().end());
    Polynomial even(std::move(stripped));
    if (even.coeff(0).is_zero())
        throw invalid_input("NotSquareFree", "input polynomial has repeated roots");
    return even.even_part_in_square().monic();
}

Rational gap_iterate(const Polynomial& gap_poly, const Rational& eps_sq) {
    NewtonLogDeriv newton(gap_poly);
    bool hit = false;
    Rational next = newton.step(eps_sq, hit);
    return hit ? eps_sq : next;
}

GapIteration run_gap_iteration(const Polynomial& gap_poly, const IterationControl& control) {
    GapIteration out;
    out.gap_poly = gap_poly.monic();
    NewtonLogDeriv newton(out.gap_poly);

    Rational e(0);
    out.eps_sq.push_back(e);
    for (int it = 0; it < control.max_iter; ++it) {
        bool hit = false;
        Rational next = newton.step(e, hit);
        if (hit) {
            out.exact_hit = true;
            out.converged = true;
            break;
        }
        Rational step_size = next - e;
        if (step_size.sign() <= 0)
            throw internal_error("NonMonotoneStep", "gap iterate failed to increase");
        next = conservative_round(next, step_size, /*down=*/true, control);
        step_size = next - e;
        out.eps_sq.push_back(next);
        e = next;
        if (step_small_enough(step_size, next, control)) {
            out.converged = true;
            break;
        }
    }
    if (!out.converged) {
        bool hit = false;
        newton.step(e, hit); // the budget may have ended exactly on mu^2
        if (hit) {
            out.exact_hit = true;
            out.converged = true;
        }
    }
    out.iterations = static_cast<int>(out.eps_sq.size()) - 1;
    const Rational& last = out.eps_sq.back();
    out.lower_is_exact = is_perfect_square(last, &out.certified_lower);
    if (!out.lower_is_exact) out.certified_lower = sqrt_lower_bound(last, 128);
    return out;
}

GapIteration min_gap(const Polynomial& cp, const Rational& tol, int max_iter) {
    if (!cp.is_monic())
        throw invalid_input("NotMonic", "gap iteration requires a monic polynomial");
    const long n = cp.degree();
    if (n < 1)
        throw invalid_input("InvalidInput", "gap iteration requires degree >= 1");
    if (tol.sign() <= 0)
        throw invalid_input("InvalidInput", "tolerance must be positive");

    MomentSeq t = power_sums_from_coeffs(cp, static_cast<std::size_t>(2 * n) + 1);
    HankelLadder ladder = hankel_ladder(t, static_cast<int>(n));
    if (!ladder.valid_real)
        throw invalid_input("NotRealRooted", "Hankel ladder pattern broken at D_" +
                                                 std::to_string(ladder.first_invalid));
    if (ladder.m == 1)
        throw invalid_input("SingleEigenvalue",
                            "minimal gap is undefined for a single distinct eigenvalue");

    Polynomial pm = minimal_polynomial(t, ladder.m);
    Polynomial g = squared_difference_poly(pm);

    IterationControl control;
    control.tol = tol * tol;
    control.max_iter = max_iter > 0 ? max_iter : default_gap_max_iter(ladder.m, tol);
    return run_gap_iteration(g, control);
}

std::pair<Rational, Rational> initial_outer_bounds(const Polynomial& pm) {
    const int m = pm.degree();
    if (m < 1)
        throw invalid_input("DegreeTooSmall", "outer bounds need degree >= 1");
    MomentSeq s = power_sums_from_coeffs(pm.monic(), 3);
    Rational mean = s[1] / Rational(m);
    if (m == 1) return {mean - Rational(1), mean + Rational(1)};
    Rational d2 = s[0] * s[2] - s[1] * s[1]; // sum over pairs of squared differences
    Rational radius(ceil_sqrt(d2));
    return {mean - radius, mean + radius};
}

Rational extremal_iterate(const Polynomial& pm, const Rational& c) {
    NewtonLogDeriv newton(pm);
    bool hit = false;
    Rational next = newton.step(c, hit);
    return hit ? c : next;
}

ExtremalIteration run_extremal_iteration(const Polynomial& pm, Side side,
                                         const IterationControl& control) {
    ExtremalIteration out;
    out.side = side;
    auto [low, high] = initial_outer_bounds(pm);
    Rational c = side == Side::Min ? low : high;
    out.values.push_back(c);
    NewtonLogDeriv newton(pm.monic());
    const bool increasing = side == Side::Min;

    for (int it = 0; it < control.max_iter; ++it) {
        bool hit = false;
        Rational next = newton.step(c, hit);
        if (hit) {
            out.exact_hit = true;
            out.converged = true;
            break;
        }
        Rational step_size = increasing ? next - c : c - next;
        if (step_size.sign() <= 0)
            throw internal_error("NonMonotoneStep", "extremal iterate failed to progress");
        next = conservative_round(next, step_size, /*down=*/increasing, control);
        step_size = (increasing ? next - c : c - next);
        out.values.push_back(next);
        c = next;
        if (step_small_enough(step_size, next, control)) {
            out.converged = true;
            break;
        }
    }
    if (!out.converged) {
        bool hit = false;
        newton.step(c, hit);
        if (hit) {
            out.exact_hit = true;
            out.converged = true;
        }
    }
    out.iterations = static_cast<int>(out.values.size()) - 1;
    out.certified_bound = out.values.back();
    return out;
}

ExtremalIteration extremal_bound(const Polynomial& pm, Side side, const Rational& tol,
                                 int max_iter) {
    if (tol.sign() <= 0)
        throw invalid_input("InvalidInput", "tolerance must be positive");
    IterationControl control;
    control.tol = tol;
    control.max_iter = max_iter;
    return run_extremal_iteration(pm, side, control);
}

int default_gap_max_iter(int m, const Rational& tol) {
    if (tol.sign() <= 0 || tol >= Rational(1)) return 64;
    RatInterval l = ln_interval(tol.reciprocal());
    Rational bound = Rational(7) / Rational(2) * Rational(m - 1) * l.hi; // doubled 7/4
    long k = bound.ceil().get_si();
    return static_cast<int>(std::max(8L, k));
}

} // namespace exspec
