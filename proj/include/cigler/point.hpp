#pragma once

#include <optional>
#include <string>

#include "cigler/rational.hpp"

namespace cigler {

/// Admissible parameter pair: q not in {0, 1, -1} and a != -1. Under these
/// rules every denominator (1 - q^m), (1 + a) and q^m in the formulas is
/// nonzero, since a rational q with q^m = 1 for some m >= 1 must be +-1.
struct QPoint {
  Rational q;
  Rational a;

  /// Throws InvalidInput naming the violated rule.
  static QPoint make(const Rational &q, const Rational &a);

  /// Description of the first violated rule, if any.
  static std::optional<std::string> violation(const Rational &q, const Rational &a);

  friend bool operator==(const QPoint &, const QPoint &) = default;
};

/// q alone is admissible for the q-only checks.
std::optional<std::string> q_violation(const Rational &q);

std::string to_string(const QPoint &point);

} // namespace cigler
