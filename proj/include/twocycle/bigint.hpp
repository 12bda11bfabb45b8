#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace twocycle {

// All lattice arithmetic is exact. 64-bit overflow anywhere in the pipeline
// would silently corrupt verdicts, so plain machine integers are never used
// for matrix or form coefficients.
using Z = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

inline int sign_of(const Z& x) { return x.sign(); }

// Floor division (C++ '/' truncates toward zero).
inline Z floor_div(const Z& a, const Z& b) {
    Z q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace twocycle
