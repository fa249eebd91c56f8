#include "betadesign/quadratic.hpp"

#include <stdexcept>

namespace betadesign {

namespace {

ExactInt pow10(int n) {
  ExactInt r = 1;
  for (int t = 0; t < n; ++t) r *= 10;
  return r;
}

void validate(const QuadraticRootBound& q) {
  if (q.a <= 0)
    throw std::invalid_argument("QuadraticRootBound: leading coefficient must be positive");
  if (discriminant(q) < 0)
    throw std::domain_error("QuadraticRootBound: negative discriminant, no real roots");
}

/// Rescales so that the selected root becomes root * 10^places.
QuadraticRootBound scale_root(const QuadraticRootBound& q, int places) {
  ExactInt s = pow10(places);
  return {q.a, q.b * s, q.c * s * s, q.selector};
}

}  // namespace

ExactRational discriminant(const QuadraticRootBound& q) {
  return q.b * q.b - 4 * q.a * q.c;
}

RootOrder compare_root(const ExactRational& x, const QuadraticRootBound& q) {
  validate(q);
  ExactRational value = q.a * x * x + q.b * x + q.c;
  ExactRational vertex_side = 2 * q.a * x + q.b;  // sign of x - vertex
  if (q.selector == RootSelector::smaller) {
    // x <= smaller root exactly when the quadratic is nonnegative at x and
    // x is not beyond the vertex.
    if (value >= 0 && vertex_side <= 0)
      return value == 0 ? RootOrder::equal : RootOrder::less;
    return RootOrder::greater;
  }
  if (value >= 0 && vertex_side >= 0)
    return value == 0 ? RootOrder::equal : RootOrder::greater;
  return RootOrder::less;
}

QuadraticRootBound negate_root(const QuadraticRootBound& q) {
  RootSelector flipped = q.selector == RootSelector::smaller
                             ? RootSelector::larger
                             : RootSelector::smaller;
  return {q.a, -q.b, q.c, flipped};
}

ExactInt floor_root(const QuadraticRootBound& q) {
  validate(q);
  // root = (-b + sign * sqrt(disc)) / (2a); put everything over one
  // integer denominator so the floor reduces to integer square roots.
  const ExactInt an = numerator(q.a), ad = denominator(q.a);
  const ExactInt bn = numerator(q.b), bd = denominator(q.b);
  ExactRational disc = discriminant(q);
  const ExactInt dn = numerator(disc), dd = denominator(disc);

  ExactInt a_term = -ad * bn * dd;
  ExactInt s_factor = ad * bd;          // positive
  ExactInt m = dn * dd;                 // sqrt(disc) = sqrt(m) / dd
  ExactInt den = 2 * an * bd * dd;      // positive

  ExactInt radical = s_factor * s_factor * m;
  if (q.selector == RootSelector::larger)
    return floor_div(a_term + isqrt_floor(radical), den);
  return floor_div(a_term - isqrt_ceil(radical), den);
}

ExactInt ceil_root(const QuadraticRootBound& q) {
  return -floor_root(negate_root(q));
}

std::string approximate_root(const QuadraticRootBound& q, int decimal_places) {
  if (decimal_places < 0)
    throw std::invalid_argument("approximate_root: negative decimal_places");
  validate(q);
  bool negative = compare_root(ExactRational(0), q) == RootOrder::greater;
  QuadraticRootBound scaled = scale_root(q, decimal_places);
  ExactInt m = negative ? floor_root(negate_root(scaled)) : floor_root(scaled);
  if (m < 0) m = 0;  // a root in (-1, 1) truncates to zero either way

  ExactInt ip = m, fp = 0;
  if (decimal_places > 0) {
    ExactInt s = pow10(decimal_places);
    ip = m / s;
    fp = m % s;
  }
  std::string out;
  if (negative && m > 0) out += "-";
  out += ip.str();
  if (decimal_places > 0) {
    std::string frac = fp.str();
    out += "." + std::string(decimal_places - frac.size(), '0') + frac;
  }
  return out;
}

}  // namespace betadesign
