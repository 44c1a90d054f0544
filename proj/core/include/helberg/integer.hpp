#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace helberg {

// Weights and moments grow geometrically with the word length, so all moment
// arithmetic is done on arbitrary-precision integers.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace helberg
