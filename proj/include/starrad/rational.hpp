#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace starrad {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Every finite double is a dyadic rational; this conversion is exact.
inline Rational exact_rational(double x) { return Rational(x); }

}  // namespace starrad
