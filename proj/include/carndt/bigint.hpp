#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace carndt {

// Counts and series coefficients grow exponentially; everything countable
// in this library uses exact unbounded integers.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace carndt
