#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace randrank {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact rational -> double, safe for numerators/denominators far beyond
// the range of long double. Scales both parts down to 64-bit leading
// chunks, then reassembles the exponent with ldexp.
double to_double(const Rational& q);

// num / 2^pow2 without building the huge power-of-two denominator.
double scaled_to_double(const BigInt& num, long pow2);

// Renders "num/den" in lowest terms ("0/1" for zero, "3/1" for integers).
std::string to_fraction_string(const Rational& q);

BigInt binomial(unsigned n, unsigned k);

} // namespace randrank
