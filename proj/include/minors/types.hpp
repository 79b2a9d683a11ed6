// Shared scalar and sequence aliases used across the library.
//
// All arithmetic that can overflow 64 bits (symmetrizer sums, character
// tables, rank certificates) runs on arbitrary-precision integers/rationals.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace minors {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Weakly decreasing sequence of positive parts; trailing zeros are never
// stored, the empty vector is the zero partition.
using Partition = std::vector<int>;

// Integer weight vector; column-side entries are negative.
using WeightVector = std::vector<int>;

inline void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace minors
