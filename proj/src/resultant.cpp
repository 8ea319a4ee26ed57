#include "exspec/resultant.hpp"

#include "exspec/errors.hpp"

namespace exspec {

Rational resultant(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero())
        return (p.degree() == 0 && q.degree() == 0) ? Rational(1) : Rational(0);
    Polynomial f = p, g = q;
    Rational acc(1);
    if (f.degree() < g.degree()) {
        if ((f.degree() & 1) && (g.degree() & 1)) acc = -acc;
        std::swap(f, g);
    }
    // Res(f, g) = (-1)^{deg f deg g} lc(g)^{deg f - deg r} Res(g, r), r = f mod g.
    while (g.degree() > 0) {
        Polynomial r = poly_divmod(f, g).second;
        if ((f.degree() & 1) && (g.degree() & 1)) acc = -acc;
        int drop = f.degree() - r.degree();
        if (r.is_zero()) return Rational(0);
        acc *= pow_int(g.leading(), drop);
        f = std::move(g);
        g = std::move(r);
    }
    // g is a nonzero constant now.
    return acc * pow_int(g.coeff(0), f.degree());
}

Polynomial interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
    if (nodes.size() != values.size() || nodes.empty())
        throw internal_error("InterpolationMismatch", "node/value count mismatch");
    const std::size_t n = nodes.size();
    // Divided differences, then expand the Newton form.
    std::vector<Rational> dd = values;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    Polynomial result = Polynomial::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;)
        result = result * Polynomial::linear_root(nodes[i]) + Polynomial::constant(dd[i]);
    return result;
}

Polynomial shift_resultant(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial::zero();
    const long dz = static_cast<long>(p.degree()) * q.degree();
    std::vector<Rational> nodes, vals;
    nodes.reserve(static_cast<std::size_t>(dz) + 1);
    vals.reserve(static_cast<std::size_t>(dz) + 1);
    for (long e = 0; e <= dz; ++e) {
        Rational z(e);
        nodes.push_back(z);
        vals.push_back(resultant(p, q.shifted(z)));
    }
    return interpolate(nodes, vals);
}

} // namespace exspec
