#include "cigler/error.hpp"
#include "cigler/expansion.hpp"
#include "cigler/identities.hpp"
#include "cigler/moments.hpp"
#include "cigler/recurrence.hpp"

namespace cigler {

namespace {

void check_point(const QPoint &point) {
  if (auto why = QPoint::violation(point.q, point.a))
    throw InvalidInput("inadmissible point " + to_string(point) + ": " + *why);
}

void require_nonnegative(int n, const char *what) {
  if (n < 0)
    throw InvalidInput(std::string(what) + " must be non-negative");
}

} // namespace

Rational coeff_b(int n, const QPoint &point) {
  require_nonnegative(n, "b index");
  check_point(point);
  return generic::coeff_b(n, point.q, point.a);
}

Rational coeff_lambda(int n, const QPoint &point) {
  check_point(point);
  return generic::coeff_lambda(n, point.q, point.a);
}

RecurrenceTable recurrence_table(int upto, const QPoint &point) {
  require_nonnegative(upto, "table size");
  check_point(point);
  return RecurrenceTable(point.q, point.a, upto);
}

Polynomial s_polynomial(int n, const QPoint &point) {
  require_nonnegative(n, "s index");
  return generic::s_polynomials(recurrence_table(n, point), n).back();
}

MomentTable moments(int upto, const QPoint &point) {
  require_nonnegative(upto, "moment count");
  return generic::moment_table(recurrence_table(upto, point), upto);
}

std::vector<Rational> moments_via_basis(int upto, const QPoint &point) {
  require_nonnegative(upto, "moment count");
  return generic::moments_via_basis(generic::s_polynomials(recurrence_table(upto, point), upto));
}

Rational cigler_P(int n, const QPoint &point) {
  require_nonnegative(n, "P index");
  check_point(point);
  return generic::cigler_P(n, point.q, point.a);
}

Polynomial pi_product(int n, const QPoint &point) {
  require_nonnegative(n, "pi index");
  check_point(point);
  return generic::pi_product(n, point.q, point.a);
}

Rational L_pi(int n, int eps, const QPoint &point, LpiMethod method) {
  require_nonnegative(n, "pi index");
  if (eps != 0 && eps != 1)
    throw InvalidInput("eps must be 0 or 1");
  check_point(point);
  if (method == LpiMethod::closed)
    return generic::L_pi_closed(n, eps, point.q, point.a);
  return generic::L_pi_direct(n, eps, point.q, point.a, moments(2 * n + eps, point).mu);
}

ExpansionTable expansion_coeffs(int n, const QPoint &point) {
  require_nonnegative(n, "expansion index");
  check_point(point);
  return {n, generic::expansion_coeffs(n, point.q, point.a)};
}

bool check_expansion(int n, const QPoint &point) {
  require_nonnegative(n, "expansion index");
  check_point(point);
  return all_hold(identity::expansion(n, point.q, point.a, Mutation{}));
}

InductionCheck induction_step(int n, int k, const QPoint &point) {
  require_nonnegative(n, "n");
  if (k < 0 || k > 2 * n + 2)
    throw InvalidInput("k must lie in 0..2n+2");
  check_point(point);
  const RecurrenceTable rec(point.q, point.a, 2 * n + 1);
  const auto current = generic::expansion_coeffs(n, point.q, point.a);
  auto rhs = generic::five_term_rhs(n, k, point.q, point.a, rec, current);
  return {generic::expansion_coeffs(n + 1, point.q, point.a)[static_cast<std::size_t>(k)],
          std::move(rhs.rhs), std::move(rhs.diagnostic)};
}

bool check_induction_step(int n, int k, const QPoint &point) { return induction_step(n, k, point).holds(); }

bool check_theorem(int n, const QPoint &point) {
  require_nonnegative(n, "n");
  check_point(point);
  const Mutation none;
  if (!all_hold(identity::theorem_top(n, point.q, point.a, none)))
    return false;
  if (n >= 1 && !all_hold(identity::theorem_odd(n, point.q, point.a, none)))
    return false;
  return all_hold(identity::theorem_moments(n, point.q, point.a, none));
}

} // namespace cigler
