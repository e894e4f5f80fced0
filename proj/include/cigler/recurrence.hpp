#pragma once

#include <string>
#include <vector>

#include "cigler/algebra.hpp"
#include "cigler/error.hpp"
#include "cigler/point.hpp"

namespace cigler {

/// Harness self-check hook: negates one recurrence coefficient in every
/// table built with it. Target::none leaves tables untouched.
struct Mutation {
  enum class Target { none, b, lambda };
  Target target = Target::none;
  int index = 0;

  bool active() const { return target != Target::none; }
};

namespace generic {

template <class F> F coeff_b(int n, const F &q, const F &a) {
  const F one(1);
  const F one_minus_q = one - q;
  const F one_plus_a = one + a;
  const F sq_plus = one_plus_a * one_plus_a;
  const F pre_den = (one - pow(q, 2 * n + 1)) * (one - pow(q, 2 * n - 1)) * one_plus_a;
  if (n % 2 == 0) {
    const F first = a * (one - pow(q, 2 * n - 1)) * (one - pow(q, n + 1)) * (one - pow(q, n)) / one_minus_q;
    const F bracket = (one - pow(q, n - 1)) / one_minus_q + pow(q, n + 1) * (one - pow(q, n)) / one_minus_q;
    return -(one_minus_q / pre_den) * (first - pow(q, n) * bracket * sq_plus);
  }
  const F first = a * (one - pow(q, 2 * n + 1)) * (one - pow(q, n - 1)) * (one - pow(q, n)) / one_minus_q;
  const F bracket = (one - pow(q, n)) / one_minus_q + pow(q, n - 2) * (one - pow(q, n + 1)) / one_minus_q;
  return (one_minus_q / pre_den) * (first - pow(q, n + 1) * bracket * sq_plus);
}

template <class F> F coeff_lambda(int n, const F &q, const F &a) {
  if (n < 1)
    throw InvalidInput("lambda_n is defined for n >= 1 only");
  const F one(1);
  const F gap = one - pow(q, 2 * n - 1);
  if (n % 2 == 0) {
    const F one_plus_a = one + a;
    return pow(q, n) * one_plus_a * one_plus_a * (one - pow(q, n - 1)) * (one - pow(q, n)) / (gap * gap);
  }
  const F one_plus_a = one + a;
  const F num = (a + pow(q, n)) * (a + pow(q, n - 1)) * (one + a * pow(q, n - 1)) * (one + a * pow(q, n));
  return -(num / (one_plus_a * one_plus_a * gap * gap));
}

/// b_0..b_upto and lambda_1..lambda_upto for one parameter point.
template <class F> class Recurrence {
public:
  Recurrence(const F &q, const F &a, int upto, const Mutation &mutation = {}) : upto_(upto) {
    b_.reserve(static_cast<std::size_t>(upto + 1));
    lambda_.reserve(static_cast<std::size_t>(upto + 1));
    lambda_.push_back(F(0)); // slot 0 is never read through lambda()
    for (int n = 0; n <= upto; ++n) {
      b_.push_back(generic::coeff_b(n, q, a));
      if (n >= 1)
        lambda_.push_back(generic::coeff_lambda(n, q, a));
    }
    if (mutation.target == Mutation::Target::b && mutation.index >= 0 && mutation.index <= upto)
      b_[static_cast<std::size_t>(mutation.index)] = -b_[static_cast<std::size_t>(mutation.index)];
    if (mutation.target == Mutation::Target::lambda && mutation.index >= 1 && mutation.index <= upto)
      lambda_[static_cast<std::size_t>(mutation.index)] = -lambda_[static_cast<std::size_t>(mutation.index)];
  }

  int upto() const { return upto_; }

  const F &b(int n) const {
    if (n < 0 || n > upto_)
      throw InvalidInput("b index " + std::to_string(n) + " outside table 0.." + std::to_string(upto_));
    return b_[static_cast<std::size_t>(n)];
  }

  const F &lambda(int n) const {
    if (n < 1 || n > upto_)
      throw InvalidInput("lambda index " + std::to_string(n) + " outside table 1.." + std::to_string(upto_));
    return lambda_[static_cast<std::size_t>(n)];
  }

private:
  int upto_;
  std::vector<F> b_;
  std::vector<F> lambda_;
};

/// s_0..s_count by s_{n+1} = (x - b_n) s_n - lambda_n s_{n-1}.
template <class F>
std::vector<BasicPolynomial<F>> s_polynomials(const Recurrence<F> &rec, int count) {
  std::vector<BasicPolynomial<F>> s;
  s.reserve(static_cast<std::size_t>(count + 1));
  s.push_back(BasicPolynomial<F>::constant(F(1)));
  for (int n = 0; n < count; ++n) {
    auto next = s.back().shift_mul_x() - s.back() * rec.b(n);
    if (n >= 1)
      next -= s[static_cast<std::size_t>(n - 1)] * rec.lambda(n);
    s.push_back(std::move(next));
  }
  return s;
}

} // namespace generic

using RecurrenceTable = generic::Recurrence<Rational>;

Rational coeff_b(int n, const QPoint &point);
Rational coeff_lambda(int n, const QPoint &point);
RecurrenceTable recurrence_table(int upto, const QPoint &point);
Polynomial s_polynomial(int n, const QPoint &point);

} // namespace cigler
