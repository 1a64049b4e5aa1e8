#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace engelkit {

// Exact integer type used throughout: series coefficients, lattice entries,
// certificate exponents. Normal-form pivoting can blow past 64 bits even on
// small inputs, so fixed width is not an option.
using Int = boost::multiprecision::cpp_int;

}  // namespace engelkit
