#pragma once

#include "betadesign/exact.hpp"

namespace betadesign {

/// C(n, k) with the zero convention: 0 whenever k < 0, n < 0 or k > n.
ExactInt binomial(long long n, long long k);

/// sum_{l=0..j} C(m, s-l) * C(j, l).  Preconditions: m > 0, s >= j > 0.
ExactInt convolution_sum(long long m, long long s, long long j);

/// C(m+j, j) * C(m, s-j) / C(s, j), the closed form the convolution
/// sum collapses to.  Same preconditions as convolution_sum.
ExactRational convolution_closed_form(long long m, long long s, long long j);

}  // namespace betadesign
