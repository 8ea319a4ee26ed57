#pragma once

// Shared test fixtures: constructed spectra with known roots and
// multiplicities, plus brute-force oracles that stay independent of the
// library's computation paths (subset-sum Hankel determinants, pair sums
// over known roots, Euclidean gcd for the minimal polynomial).

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "exspec/moments.hpp"
#include "exspec/polynomial.hpp"

namespace exspec::test {

struct Spectrum {
    std::vector<Rational> roots; // ascending, distinct
    std::vector<long> mults;

    long n() const {
        long s = 0;
        for (long m : mults) s += m;
        return s;
    }
    int m() const { return static_cast<int>(roots.size()); }

    Polynomial cp() const {
        Polynomial p = Polynomial::constant(Rational(1));
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (long j = 0; j < mults[i]; ++j) p *= Polynomial::linear_root(roots[i]);
        return p;
    }

    Polynomial min_poly() const { return Polynomial::from_roots(roots); }

    // Brute-force weighted power sums.
    MomentSeq moments(std::size_t count) const {
        MomentSeq t;
        t.source_degree = n();
        t.values.resize(count);
        for (std::size_t k = 0; k < count; ++k) {
            Rational acc(0);
            for (std::size_t i = 0; i < roots.size(); ++i)
                acc += Rational(mults[i]) * pow_int(roots[i], static_cast<long>(k));
            t.values[k] = acc;
        }
        return t;
    }

    Rational mu() const { // minimal gap: adjacent differences of the sorted roots
        Rational best = roots[1] - roots[0];
        for (std::size_t i = 2; i < roots.size(); ++i)
            best = std::min(best, roots[i] - roots[i - 1]);
        return best;
    }
    Rational mu_sq() const { return mu() * mu(); }

    const Rational& p_min() const { return roots.front(); }
    const Rational& p_max() const { return roots.back(); }
};

inline Spectrum make_spectrum(std::vector<Rational> roots, std::vector<long> mults) {
    Spectrum s{std::move(roots), std::move(mults)};
    return s;
}

inline Spectrum random_spectrum(std::mt19937_64& rng, int max_m = 6, long root_bound = 20,
                                long max_mult = 4, int min_m = 1) {
    std::uniform_int_distribution<int> md(min_m, max_m);
    const int m = md(rng);
    std::set<long> chosen;
    std::uniform_int_distribution<long> rd(-root_bound, root_bound);
    while (static_cast<int>(chosen.size()) < m) chosen.insert(rd(rng));
    Spectrum s;
    std::uniform_int_distribution<long> qd(1, max_mult);
    for (long r : chosen) {
        s.roots.emplace_back(r);
        s.mults.push_back(qd(rng));
    }
    return s;
}

// Subset-sum closed form for det H_k: sum over k-subsets of the weighted
// squared Vandermonde.
inline Rational oracle_hankel_det(const Spectrum& s, int k) {
    const int m = s.m();
    if (k > m) return Rational(0);
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    Rational total(0);
    while (true) {
        Rational term(1);
        for (int i = 0; i < k; ++i) term *= Rational(s.mults[static_cast<std::size_t>(idx[i])]);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                Rational d = s.roots[static_cast<std::size_t>(idx[j])] -
                             s.roots[static_cast<std::size_t>(idx[i])];
                term *= d * d;
            }
        total += term;
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return total;
}

// sum over unordered distinct-root pairs of 1/((p_i - p_j)^2 - c).
inline Rational oracle_pair_sum(const Spectrum& s, const Rational& c) {
    Rational acc(0);
    for (std::size_t i = 0; i < s.roots.size(); ++i)
        for (std::size_t j = i + 1; j < s.roots.size(); ++j) {
            Rational d = s.roots[j] - s.roots[i];
            acc += (d * d - c).reciprocal();
        }
    return acc;
}

// sum_i 1/(p_i - c) over the distinct roots.
inline Rational oracle_reciprocal_sum(const Spectrum& s, const Rational& c) {
    Rational acc(0);
    for (const Rational& p : s.roots) acc += (p - c).reciprocal();
    return acc;
}

// Euclidean gcd, deliberately separate from anything the library does on
// its minimal-polynomial path.
inline Polynomial oracle_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.degree() == 0 ? Polynomial::constant(Rational(1)) : a.monic();
}

inline Polynomial oracle_square_free_part(const Polynomial& p) {
    return poly_div_exact(p.monic(), oracle_gcd(p, p.derivative()));
}

// Generic recurrence step c + (sum_v 1/(v - c))^{-1} over precomputed
// values of f on root subsets.
inline Rational oracle_generic_iterate(const std::vector<Rational>& f_values, const Rational& c) {
    Rational acc(0);
    for (const Rational& v : f_values) acc += (v - c).reciprocal();
    return c + acc.reciprocal();
}

} // namespace exspec::test
