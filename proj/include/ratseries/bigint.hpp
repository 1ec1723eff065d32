#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace ratseries {

// Exact arbitrary-precision integers and rationals. Every coefficient-level
// computation in the library (Hankel determinants, recurrences, rational
// reconstruction) runs on these; floating point only enters in the numeric
// modules (capacity, contour, ODE continuation).
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using Complex = std::complex<double>;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt bigint_from_decimal(const std::string& s) { return BigInt(s); }

inline BigInt numerator(const BigRat& q) {
    return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const BigRat& q) {
    return boost::multiprecision::denominator(q);
}

inline bool is_integer(const BigRat& q) { return denominator(q) == 1; }

}  // namespace ratseries
