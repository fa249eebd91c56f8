#include "betadesign/exact.hpp"

#include <stdexcept>

namespace betadesign {

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  // Division through cpp_rational reduces and fixes the sign of the
  // denominator; the two-argument constructor would reject den < 0.
  return ExactRational(num) / ExactRational(den);
}

ExactInt floor_div(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::invalid_argument("floor_div: zero denominator");
  ExactInt q = num / den;  // truncates toward zero
  if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

ExactInt floor_rational(const ExactRational& x) {
  return floor_div(numerator(x), denominator(x));
}

ExactInt ceil_rational(const ExactRational& x) {
  return -floor_div(-numerator(x), denominator(x));
}

bool is_integral(const ExactRational& x) { return denominator(x) == 1; }

ExactInt isqrt_floor(const ExactInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  return sqrt(n);
}

ExactInt isqrt_ceil(const ExactInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt_ceil: negative argument");
  ExactInt rem;
  ExactInt s = sqrt(n, rem);
  return rem == 0 ? s : s + 1;
}

std::string rational_to_string(const ExactRational& x) {
  if (is_integral(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace betadesign
