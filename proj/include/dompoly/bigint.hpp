#pragma once

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dompoly {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal integer; throws std::invalid_argument-style errors from boost
/// on malformed input, which callers translate.
inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

/// Splits |v| into a mantissa in [0.5, 1) and a binary exponent, so huge values can be
/// handled in double without overflow: |v| = mantissa * 2^exponent.
inline double frexp_big(const BigInt& v, long& exponent)
{
    if (v == 0) {
        exponent = 0;
        return 0.0;
    }
    BigInt mag = boost::multiprecision::abs(v);
    const long bits = static_cast<long>(boost::multiprecision::msb(mag)) + 1;
    long shift = bits > 64 ? bits - 64 : 0;
    if (shift > 0) mag >>= shift;
    int e = 0;
    double m = std::frexp(mag.convert_to<double>(), &e);
    exponent = shift + e;
    return v < 0 ? -m : m;
}

/// Converts v * 2^(-scale_exponent) to double without forming the full-size double first.
inline double to_scaled_double(const BigInt& v, long scale_exponent)
{
    long e = 0;
    const double m = frexp_big(v, e);
    return std::ldexp(m, static_cast<int>(e - scale_exponent));
}

} // namespace dompoly
