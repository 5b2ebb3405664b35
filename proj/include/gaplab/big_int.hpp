#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gaplab {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned exponent) {
  BigInt value = 1;
  value <<= exponent;
  return value;
}

inline std::string to_string(const BigInt& value) { return value.str(); }

} // namespace gaplab
