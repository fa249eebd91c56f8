#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace betadesign {

/// Arbitrary precision signed integer used for all counting arithmetic.
using ExactInt = boost::multiprecision::cpp_int;

/// Arbitrary precision rational; always kept in canonical form
/// (gcd-reduced, positive denominator).
using ExactRational = boost::multiprecision::cpp_rational;

/// Builds num/den in canonical form. Throws std::invalid_argument if den == 0.
ExactRational make_rational(const ExactInt& num, const ExactInt& den);

/// Floor division; den must be nonzero, rounds toward minus infinity.
ExactInt floor_div(const ExactInt& num, const ExactInt& den);

ExactInt floor_rational(const ExactRational& x);
ExactInt ceil_rational(const ExactRational& x);

bool is_integral(const ExactRational& x);

/// Floor of the square root; n must be nonnegative.
ExactInt isqrt_floor(const ExactInt& n);

/// Smallest integer >= sqrt(n); n must be nonnegative.
ExactInt isqrt_ceil(const ExactInt& n);

/// "num/den" for non-integers, plain digits otherwise.
std::string rational_to_string(const ExactRational& x);

}  // namespace betadesign
