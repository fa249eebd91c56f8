#include "betadesign/binomial.hpp"

#include <stdexcept>

namespace betadesign {

ExactInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt result = 1;
  // Multiplicative form; every intermediate quotient is exact.
  for (long long t = 1; t <= k; ++t) {
    result *= (n - k + t);
    result /= t;
  }
  return result;
}

ExactInt convolution_sum(long long m, long long s, long long j) {
  if (m <= 0 || j <= 0 || s < j)
    throw std::invalid_argument("convolution_sum: requires m > 0, s >= j > 0");
  ExactInt total = 0;
  for (long long l = 0; l <= j; ++l) total += binomial(m, s - l) * binomial(j, l);
  return total;
}

ExactRational convolution_closed_form(long long m, long long s, long long j) {
  if (m <= 0 || j <= 0 || s < j)
    throw std::invalid_argument(
        "convolution_closed_form: requires m > 0, s >= j > 0");
  ExactInt num = binomial(m + j, j) * binomial(m, s - j);
  ExactInt den = binomial(s, j);  // nonzero since s >= j >= 0
  return make_rational(num, den);
}

}  // namespace betadesign
