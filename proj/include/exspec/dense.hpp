#pragma once

#include <Eigen/Core>

#include "exspec/complex_rational.hpp"
#include "exspec/rational.hpp"

// Eigen scalar plumbing for the exact types.  Only dense storage and
// coefficient-wise / product expressions are used; decompositions are
// provided by this library (Bareiss), never by Eigen.
namespace Eigen {

template <>
struct NumTraits<exspec::Rational> : GenericNumTraits<exspec::Rational> {
    using Real = exspec::Rational;
    using NonInteger = exspec::Rational;
    using Nested = exspec::Rational;
    using Literal = long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
    static inline exspec::Rational epsilon() { return exspec::Rational(0); }
    static inline exspec::Rational dummy_precision() { return exspec::Rational(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<exspec::ComplexRational> : GenericNumTraits<exspec::ComplexRational> {
    using Real = exspec::Rational;
    using NonInteger = exspec::ComplexRational;
    using Nested = exspec::ComplexRational;
    using Literal = long;
    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 120,
        MulCost = 240,
    };
    static inline exspec::Rational epsilon() { return exspec::Rational(0); }
    static inline exspec::Rational dummy_precision() { return exspec::Rational(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace exspec {

inline const Rational& conj(const Rational& x) { return x; }
inline const Rational& real(const Rational& x) { return x; }
inline Rational imag(const Rational&) { return Rational(0); }
inline Rational abs(const Rational& x) { return x.abs(); }
inline Rational abs2(const Rational& x) { return x * x; }

inline ComplexRational conj(const ComplexRational& x) { return x.conj(); }
inline const Rational& real(const ComplexRational& x) { return x.re; }
inline const Rational& imag(const ComplexRational& x) { return x.im; }
inline Rational abs2(const ComplexRational& x) { return x.re * x.re + x.im * x.im; }

using ExactMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using ComplexMatrix = Eigen::Matrix<ComplexRational, Eigen::Dynamic, Eigen::Dynamic>;

} // namespace exspec
