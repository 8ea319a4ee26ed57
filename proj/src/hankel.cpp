#include "exspec/hankel.hpp"

#include "exspec/errors.hpp"

namespace exspec {

ExactMatrix build_hankel(const std::vector<Rational>& values, int k) {
    if (k < 1)
        throw invalid_input("InsufficientMoments", "Hankel order must be >= 1");
    if (values.size() < static_cast<std::size_t>(2 * k - 1))
        throw invalid_input("InsufficientMoments",
                            "need " + std::to_string(2 * k - 1) + " moments for order " +
                                std::to_string(k));
    ExactMatrix h(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) h(i, j) = values[static_cast<std::size_t>(i + j)];
    return h;
}

ExactMatrix build_hankel(const MomentSeq& t, int k) { return build_hankel(t.values, k); }

HankelLadder hankel_ladder(const MomentSeq& t, int n) {
    if (n < 1)
        throw invalid_input("InsufficientMoments", "ladder needs degree >= 1");
    if (t.size() < static_cast<std::size_t>(2 * n - 1))
        throw invalid_input("InsufficientMoments", "ladder needs 2n-1 moments");
    HankelLadder out;
    out.dets.reserve(static_cast<std::size_t>(n));
    bool in_zero_tail = false;
    out.valid_real = true;
    for (int k = 1; k <= n; ++k) {
        Rational d = det_exact(build_hankel(t, k));
        out.dets.push_back(d);
        if (!out.valid_real) continue; // keep filling the ladder for diagnostics
        if (!in_zero_tail) {
            if (d.sign() > 0) {
                out.m = k;
            } else if (d.is_zero()) {
                in_zero_tail = true;
            } else {
                out.valid_real = false;
                out.first_invalid = k;
            }
        } else if (!d.is_zero()) {
            out.valid_real = false;
            out.first_invalid = k;
        }
    }
    if (out.valid_real && out.m == 0) {
        out.valid_real = false; // D_1 = t_0 <= 0: not a moment sequence of any spectrum
        out.first_invalid = 1;
    }
    if (!out.valid_real) out.m = 0;
    return out;
}

Rational hankel_polynomial(const MomentSeq& t, int k, const Rational& x) {
    if (k == 0) return Rational(1);
    if (k < 0 || t.size() < static_cast<std::size_t>(2 * k))
        throw invalid_input("InsufficientMoments", "bordered determinant of order " +
                                                       std::to_string(k) + " needs 2k moments");
    ExactMatrix m(k + 1, k + 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= k; ++j) m(i, j) = t[static_cast<std::size_t>(i + j)];
    Rational p(1);
    for (int j = 0; j <= k; ++j) {
        m(k, j) = p;
        p *= x;
    }
    return det_exact(m);
}

namespace {

// Sign variations after dropping zeros.
int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

std::vector<int> sign_sequence(const MomentSeq& t, int m, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(m) + 1);
    signs.push_back(1); // H_0 = 1
    for (int k = 1; k <= m; ++k) signs.push_back(hankel_polynomial(t, k, x).sign());
    for (std::size_t i = 0; i + 1 < signs.size(); ++i)
        if (signs[i] == 0 && signs[i + 1] == 0)
            throw invalid_input("ConsecutiveZeros",
                                "two consecutive zero bordered determinants at x = " + x.str() +
                                    "; perturb the endpoint");
    return signs;
}

} // namespace

int count_roots_in_interval(const MomentSeq& t, int m, const Rational& a, const Rational& b) {
    if (!(a < b))
        throw invalid_input("EmptyInterval", "interval endpoints must satisfy a < b");
    int va = variations(sign_sequence(t, m, a));
    int vb = variations(sign_sequence(t, m, b));
    return va - vb;
}

} // namespace exspec
