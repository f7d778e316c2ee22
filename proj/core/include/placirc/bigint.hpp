#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace placirc {

// Arbitrary-precision signed integer used for all exact sequence and matrix
// arithmetic. Sequence terms grow geometrically (ratio ~ 1.3247), so 64-bit
// integers overflow near n = 150 while several identities are exercised out
// to n = 512; everything that must stay exact goes through BigInt.
using BigInt = boost::multiprecision::cpp_int;

// Lossy conversion for floating-point comparisons.
inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace placirc
