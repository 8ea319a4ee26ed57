#include "exspec/orbit_classify.hpp"

#include <algorithm>

#include "exspec/errors.hpp"
#include "exspec/hankel.hpp"

namespace exspec {

Lattice build_lattice(const MultiplicitySpectrum& spectrum, const GapIteration& gap,
                      const Rational& lowb, const Rational& highb) {
    if (spectrum.m < 2)
        throw invalid_input("DegenerateGap",
                            "single distinct eigenvalue: classification needs no lattice");
    if (gap.certified_lower.sign() <= 0)
        throw internal_error("DegenerateGap", "certified gap bound must be positive");
    if (!(lowb < highb))
        throw internal_error("BadBracket", "lower bound must be below upper bound");
    Lattice lat;
    lat.origin = lowb;
    lat.step = gap.certified_lower;
    Int m_count = ((highb - lowb) / lat.step).floor() + 1;
    lat.cells = m_count.get_si();
    return lat;
}

std::set<long> occupancy_set(const Polynomial& factor, const Lattice& lat) {
    std::set<long> occupied;
    int prev = factor(lat.origin).sign();
    if (prev == 0)
        throw internal_error("RootOnOriginBoundary",
                             "factor vanishes at the lattice origin, which lies below all roots");
    Rational x = lat.origin;
    for (long j = 1; j <= lat.cells; ++j) {
        x += lat.step;
        int s = factor(x).sign();
        if (s == 0) {
            occupied.insert(j); // root exactly at the right endpoint of cell j
            prev = -prev;       // square-free factor: the sign flips across it
        } else {
            if (s != prev) occupied.insert(j);
            prev = s;
        }
    }
    return occupied;
}

OrbitSignature class_signature(const Polynomial& cp) {
    MultiplicitySpectrum spectrum = multiplicity_spectrum(cp);
    OrbitSignature sig;
    if (spectrum.m == 1) {
        sig.ordered_multiplicities.push_back(spectrum.n);
        return sig;
    }

    // A loose gap bound is enough for a valid lattice; convergence effort
    // here is a cost knob, not a correctness one.
    Polynomial g = squared_difference_poly(spectrum.min_poly);
    IterationControl gap_ctl;
    gap_ctl.tol = Rational(0);
    gap_ctl.rel_step = Rational(Int(1), Int(16));
    gap_ctl.max_iter = 256;
    GapIteration gap = run_gap_iteration(g, gap_ctl);

    IterationControl ext_ctl;
    ext_ctl.tol = gap.certified_lower / Rational(4);
    ext_ctl.max_iter = 128;
    ExtremalIteration low = run_extremal_iteration(spectrum.min_poly, Side::Min, ext_ctl);
    ExtremalIteration high = run_extremal_iteration(spectrum.min_poly, Side::Max, ext_ctl);

    sig.lattice = build_lattice(spectrum, gap, low.certified_bound, high.certified_bound);

    std::vector<std::pair<long, long>> cells; // (cell index, multiplicity)
    for (const MultiplicityGroup& grp : spectrum.groups) {
        std::set<long> occ = occupancy_set(grp.factor, *sig.lattice);
        if (static_cast<long>(occ.size()) != grp.count)
            throw internal_error("OccupancyMismatch",
                                 "occupied cell count differs from the factor degree");
        for (long j : occ) cells.emplace_back(j, grp.multiplicity);
        sig.occupancy[grp.multiplicity] = std::move(occ);
    }
    std::sort(cells.begin(), cells.end());
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i].first == cells[i - 1].first)
            throw internal_error("OccupancyMismatch", "two factors claim the same lattice cell");
    for (auto& [cell, mult] : cells) sig.ordered_multiplicities.push_back(mult);
    if (static_cast<long>(sig.ordered_multiplicities.size()) != spectrum.m)
        throw internal_error("OccupancyMismatch", "occupied cells do not cover all eigenvalues");
    return sig;
}

namespace {

int distinct_count(const MomentSeq& t) {
    const long n = t.source_degree;
    if (n < 1 || t[0] != Rational(n))
        throw invalid_input("InvalidInput", "moment sequence must start at its weight");
    if (t.size() < static_cast<std::size_t>(2 * n - 1))
        throw invalid_input("InsufficientMoments", "need 2n-1 moments to rank the spectrum");
    HankelLadder ladder = hankel_ladder(t, static_cast<int>(n));
    if (!ladder.valid_real)
        throw invalid_input("NotRealRooted", "moments are not those of a real spectrum");
    return ladder.m;
}

} // namespace

bool same_orbit(const MomentSeq& tp, const MomentSeq& tq) {
    const int m = std::max(distinct_count(tp), distinct_count(tq));
    if (tp.size() < static_cast<std::size_t>(2 * m) || tq.size() < static_cast<std::size_t>(2 * m))
        throw invalid_input("InsufficientMoments", "need 2m traces to decide the orbit");
    for (std::size_t k = 0; k < static_cast<std::size_t>(2 * m); ++k)
        if (tp[k] != tq[k]) return false;
    return true;
}

bool same_class(const Polynomial& cp_p, const Polynomial& cp_q) {
    return class_signature(cp_p).ordered_multiplicities ==
           class_signature(cp_q).ordered_multiplicities;
}

} // namespace exspec
