#pragma once

#include "exspec/dense.hpp"
#include "exspec/polynomial.hpp"

namespace exspec {

/*
 * Weighted power sums t_k = sum_i r_i p_i^k of a spectrum, carried with
 * the degree of the originating polynomial (or the matrix size) so that
 * t_0 consistency checks stay local.
 */
struct MomentSeq {
    std::vector<Rational> values; // values[k] = t_k
    long source_degree = 0;

    std::size_t size() const { return values.size(); }
    const Rational& operator[](std::size_t k) const { return values[k]; }
};

// t_0..t_{count-1} for a monic polynomial: Newton's identities up to the
// degree, then the coefficient linear recurrence beyond it.
MomentSeq power_sums_from_coeffs(const Polynomial& p, std::size_t count);

// Inverse Newton identities: sigma_1..sigma_m with s interpreted as the
// power sums of an m-root multiset (s[0] must equal m).
std::vector<Rational> elementary_from_power_sums(const MomentSeq& s, long m);

// Monic degree-n polynomial whose power sums reproduce t.
Polynomial charpoly_from_traces(const MomentSeq& t, long n);

// Exact traces of H^0..H^{count-1}; validates hermiticity first and
// insists the assembled traces are exactly real.
MomentSeq traces_from_matrix(const ComplexMatrix& h, std::size_t count);

// Exact conjugate-symmetry check; rational inputs make tolerance tests
// meaningless, any asymmetry is a user error.
void validate_hermitian(const ComplexMatrix& h);

} // namespace exspec
