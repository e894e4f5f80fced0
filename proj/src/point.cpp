#include "cigler/point.hpp"

#include "cigler/error.hpp"

namespace cigler {

std::optional<std::string> q_violation(const Rational &q) {
  if (q.is_zero())
    return "q must be nonzero";
  if (q == Rational(1))
    return "q must differ from 1";
  if (q == Rational(-1))
    return "q must differ from -1";
  return std::nullopt;
}

std::optional<std::string> QPoint::violation(const Rational &q, const Rational &a) {
  if (auto why = q_violation(q))
    return why;
  if (a == Rational(-1))
    return std::string("a must differ from -1");
  return std::nullopt;
}

QPoint QPoint::make(const Rational &q, const Rational &a) {
  if (auto why = violation(q, a))
    throw InvalidInput("inadmissible point (q=" + q.to_string() + ", a=" + a.to_string() + "): " + *why);
  return QPoint{q, a};
}

std::string to_string(const QPoint &point) {
  return "(q=" + point.q.to_string() + ", a=" + point.a.to_string() + ")";
}

} // namespace cigler
