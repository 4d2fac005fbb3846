#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rankcode {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline BigInt big_pow(const BigInt& base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace rankcode
