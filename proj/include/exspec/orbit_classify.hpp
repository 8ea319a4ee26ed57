#pragma once

#include <map>
#include <optional>
#include <set>

#include "exspec/eigen_bounds.hpp"
#include "exspec/spectrum_factor.hpp"

namespace exspec {

/*
 * Uniform lattice over the certified spectral bracket.  The cell width is
 * a certified lower bound on the minimal eigenvalue gap, so every
 * half-open cell ]x_{j-1}, x_j] holds at most one distinct eigenvalue.
 */
struct Lattice {
    Rational origin; // x_0, strictly below the smallest eigenvalue
    Rational step;   // delta
    long cells = 0;  // M; x_M = origin + M*step clears the upper bound
};

struct OrbitSignature {
    std::vector<long> ordered_multiplicities;   // r_1..r_m in eigenvalue order
    std::map<long, std::set<long>> occupancy;   // multiplicity -> occupied cell indices
    std::optional<Lattice> lattice;             // absent for the single-eigenvalue case
};

Lattice build_lattice(const MultiplicitySpectrum& spectrum, const GapIteration& gap,
                      const Rational& lowb, const Rational& highb);

// Cells whose half-open interval contains a root of the (square-free)
// factor.  An exact hit at a lattice site belongs to the cell ending
// there and the sign baseline flips across it, so the next cells are
// judged against the post-root sign.
std::set<long> occupancy_set(const Polynomial& factor, const Lattice& lat);

OrbitSignature class_signature(const Polynomial& cp);

// Unitary-orbit test: all traces up to order 2m-1 coincide, with m the
// larger distinct-eigenvalue count of the two inputs.
bool same_orbit(const MomentSeq& tp, const MomentSeq& tq);

// Orbit-class test: equal ordered multiplicity sequences.
bool same_class(const Polynomial& cp_p, const Polynomial& cp_q);

} // namespace exspec
