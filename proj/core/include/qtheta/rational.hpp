#ifndef QTHETA_RATIONAL_HPP
#define QTHETA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace qtheta {

// Exact arithmetic layer: arbitrary-precision integers and rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace qtheta

#endif
