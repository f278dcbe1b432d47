#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace singquad {

/// Arbitrary-precision rational. All symbolic coefficient algebra in the
/// library runs on this type; floating point appears only at final
/// evaluation.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) { return Rational(x); }

}  // namespace singquad
