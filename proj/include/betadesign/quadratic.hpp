#pragma once

#include "betadesign/exact.hpp"

#include <string>

namespace betadesign {

enum class RootSelector { smaller, larger };

/// One root of a*x^2 + b*x + c with a > 0, identified by selector.
/// Comparisons against it are decided exactly, without radicals.
struct QuadraticRootBound {
  ExactRational a;
  ExactRational b;
  ExactRational c;
  RootSelector selector = RootSelector::smaller;
};

enum class RootOrder { less, equal, greater };

/// b^2 - 4ac.
ExactRational discriminant(const QuadraticRootBound& q);

/// Orders x against the selected root.  Uses only the sign of the quadratic
/// at x and the side of the vertex x lies on, so the verdict is exact.
/// Throws std::invalid_argument when a <= 0 and std::domain_error when the
/// discriminant is negative.
RootOrder compare_root(const ExactRational& x, const QuadraticRootBound& q);

/// The quadratic whose selected root is the negation of q's root.
QuadraticRootBound negate_root(const QuadraticRootBound& q);

/// Largest integer n with n <= root.  Exact, via integer square root.
ExactInt floor_root(const QuadraticRootBound& q);

/// Smallest integer n with n >= root.
ExactInt ceil_root(const QuadraticRootBound& q);

/// Decimal expansion of the selected root truncated toward zero after
/// decimal_places digits, e.g. 9.6176... at 2 places prints "9.61".
std::string approximate_root(const QuadraticRootBound& q, int decimal_places);

}  // namespace betadesign
