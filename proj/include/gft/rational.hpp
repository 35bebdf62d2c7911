#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gft {

/// Exact rational scalar for golden evaluations of the bound formulas.
using Rational = boost::multiprecision::cpp_rational;

inline Rational ratio(long long num, long long den = 1) { return Rational(num) / Rational(den); }

inline double to_double(const Rational& r) { return static_cast<double>(r); }
inline double to_double(double d) { return d; }

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace gft
