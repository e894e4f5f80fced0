#include "cigler/qseries.hpp"

#include <string>

#include "cigler/error.hpp"
#include "cigler/identities.hpp"

namespace cigler {

namespace {

void require_nonnegative(int n, const char *what) {
  if (n < 0)
    throw InvalidInput(std::string(what) + " must be non-negative");
}

void require_admissible_q(const Rational &q) {
  if (auto why = q_violation(q))
    throw InvalidInput(*why);
}

} // namespace

Rational qint(int n, const Rational &q) {
  require_nonnegative(n, "qint index");
  if (q == Rational(1))
    throw InvalidInput("qint requires q != 1");
  return generic::qint(n, q);
}

Rational pochhammer(const PochhammerSpec &spec) {
  require_nonnegative(spec.length, "pochhammer length");
  if (spec.base.is_zero())
    throw InvalidInput("pochhammer base must be nonzero");
  return generic::pochhammer(spec.start, spec.base, spec.length);
}

Rational qbinom(int n, int k, const Rational &base) {
  require_nonnegative(n, "qbinom n");
  if (base.is_zero() || base == Rational(1) || base == Rational(-1))
    throw InvalidInput("qbinom base must avoid 0, 1 and -1");
  return generic::qbinom(n, k, base);
}

bool check_qbinomial_theorem(int m, const QPoint &point) {
  require_nonnegative(m, "m");
  return all_hold(identity::qbinomial_theorem(m, point.q, point.a, Mutation{}));
}

bool check_qvandermonde_limit(int p, const Rational &q) {
  require_nonnegative(p, "p");
  require_admissible_q(q);
  return all_hold(identity::qvandermonde_limit(p, q, Rational(0), Mutation{}));
}

} // namespace cigler
