#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chiralmap {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned j = 2; j <= k; ++j) r *= j;
  return r;
}

// |A_k| = k!/2 for k >= 2.
inline BigInt alternating_order(unsigned k) {
  return k >= 2 ? factorial(k) / 2 : BigInt(1);
}

}  // namespace chiralmap
