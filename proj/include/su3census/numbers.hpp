#pragma once

#include <cstdio>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace su3census {

/// Exact nonnegative counts of arbitrary magnitude.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational in lowest terms with positive denominator.
using ExactFraction = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigCount& v) { return v.str(); }

/// "num/den" form, always reduced (cpp_rational keeps canonical form).
inline std::string to_fraction_string(const ExactFraction& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const ExactFraction& q) { return q.convert_to<double>(); }

inline double to_double(const BigCount& v) { return v.convert_to<double>(); }

/// Shortest float form that round-trips (emitted CSV uses this).
inline std::string format_float17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace su3census
