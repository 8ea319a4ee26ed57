#include "exspec/linalg.hpp"

#include <utility>
#include <vector>

#include "exspec/errors.hpp"

namespace exspec {

namespace {

// Row-scales a rational matrix to integers; returns the product of the
// row scale factors (det scales linearly per row).
Int clear_denominators(const ExactMatrix& m, std::vector<std::vector<Int>>& out) {
    const long rows = m.rows(), cols = m.cols();
    out.assign(static_cast<std::size_t>(rows), std::vector<Int>(static_cast<std::size_t>(cols)));
    Int total(1);
    for (long i = 0; i < rows; ++i) {
        Int l(1);
        for (long j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (long j = 0; j < cols; ++j) {
            const Rational& e = m(i, j);
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                e.num() * (l / e.den());
        }
        total *= l;
    }
    return total;
}

struct BareissResult {
    int rank = 0;
    int sign = 1;       // parity of row/column swaps
    Int last_pivot = 1; // product form: det of the leading rank-square block
};

// Fraction-free elimination in place.  With `full_pivot` a nonzero pivot is
// searched in the whole trailing block (column swaps allowed), otherwise
// only rows are swapped and elimination stops at the first zero column.
BareissResult bareiss(std::vector<std::vector<Int>>& a, bool full_pivot) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    BareissResult res;
    Int prev(1);
    std::size_t k = 0;
    const std::size_t steps = std::min(rows, cols);
    while (k < steps) {
        std::size_t pr = rows, pc = cols;
        if (full_pivot) {
            for (std::size_t i = k; i < rows && pr == rows; ++i)
                for (std::size_t j = k; j < cols; ++j)
                    if (sgn(a[i][j]) != 0) {
                        pr = i;
                        pc = j;
                        break;
                    }
        } else {
            pc = k;
            for (std::size_t i = k; i < rows; ++i)
                if (sgn(a[i][k]) != 0) {
                    pr = i;
                    break;
                }
        }
        if (pr == rows) break; // no pivot available
        if (pr != k) {
            std::swap(a[pr], a[k]);
            res.sign = -res.sign;
        }
        if (pc != k) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][pc], a[i][k]);
            res.sign = -res.sign;
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
        res.last_pivot = prev;
        ++res.rank;
        ++k;
    }
    return res;
}

} // namespace

Rational det_exact(const ExactMatrix& m) {
    if (m.rows() != m.cols())
        throw invalid_input("NotSquare", "determinant of a non-square matrix");
    const long n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Int>> a;
    Int scale = clear_denominators(m, a);
    BareissResult r = bareiss(a, /*full_pivot=*/false);
    if (r.rank < n) return Rational(0);
    Int d = r.sign < 0 ? Int(-r.last_pivot) : r.last_pivot;
    return Rational(d, scale);
}

int rank_exact(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<std::vector<Int>> a;
    clear_denominators(m, a);
    return bareiss(a, /*full_pivot=*/true).rank;
}

ExactVector solve_exact(const ExactMatrix& m, const ExactVector& b) {
    if (m.rows() != m.cols())
        throw invalid_input("NotSquare", "solve with a non-square matrix");
    if (b.size() != m.rows())
        throw invalid_input("NotSquare", "right-hand side length mismatch");
    const long n = m.rows();
    if (n == 0) return ExactVector(0);

    ExactMatrix aug(n, n + 1);
    aug.leftCols(n) = m;
    aug.col(n) = b;
    std::vector<std::vector<Int>> a;
    clear_denominators(aug, a);
    BareissResult r = bareiss(a, /*full_pivot=*/false);
    if (r.rank < n)
        throw invalid_input("Singular", "singular system in solve_exact");

    // Back substitution on the fraction-free upper triangle.
    ExactVector x(n);
    for (long i = n - 1; i >= 0; --i) {
        Rational acc(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)]);
        for (long j = i + 1; j < n; ++j)
            acc -= Rational(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * x(j);
        x(i) = acc / Rational(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    }
    return x;
}

} // namespace exspec
