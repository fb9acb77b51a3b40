#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace qcommute {

// Arbitrary-precision signed integer / rational used for all exact counts.
// Counts here overflow 64 bits already at modest sizes (q^(2n^2) for n = 3,
// q = 5 has ~42 digits), so every externally visible count is a BigInt.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

inline BigRat big_pow(const BigRat& base, std::uint64_t exp) {
  BigRat r = 1;
  BigRat b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

}  // namespace qcommute
