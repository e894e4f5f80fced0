#include "cigler/qhermite.hpp"

#include "cigler/error.hpp"
#include "cigler/identities.hpp"

namespace cigler {

namespace {

void check_q(const Rational &q) {
  if (auto why = q_violation(q))
    throw InvalidInput(*why);
}

} // namespace

HermiteLaurent hermite_laurent(int n, const Rational &q) {
  if (n < 0)
    throw InvalidInput("hermite index must be non-negative");
  check_q(q);
  return {n, generic::hermite_laurent(n, q)};
}

bool check_hermite_recurrence(int n, const Rational &q) {
  if (n < 1)
    throw InvalidInput("hermite recurrence needs n >= 1");
  check_q(q);
  return all_hold(identity::hermite_recurrence(n, q, Rational(0), Mutation{}));
}

bool check_connection(int n, const Rational &t0, const Rational &q) {
  if (n < 0)
    throw InvalidInput("hermite index must be non-negative");
  check_q(q);
  if (t0.is_zero())
    throw InvalidInput("t0 must be nonzero");
  return all_hold(identity::hermite_connection(n, q, t0, Mutation{}));
}

} // namespace cigler
