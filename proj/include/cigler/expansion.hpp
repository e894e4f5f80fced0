#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cigler/moments.hpp"

namespace cigler {

namespace generic {

/// Coefficients a_0^{(n)}..a_{2n}^{(n)} of pi_n in the basis s_{2n}, ..., s_0.
template <class F> std::vector<F> expansion_coeffs(int n, const F &q, const F &a) {
  const F one(1);
  const F inv_q = one / q;
  const F inv_q_sq = inv_q * inv_q;
  const F q_sq = q * q;
  const F top_start = -(a * pow(q, 2 * n - 1));
  std::vector<F> out;
  out.reserve(static_cast<std::size_t>(2 * n + 1));
  for (int j = 0; j <= 2 * n; ++j) {
    const int k = j / 2;
    const F top = generic::pochhammer(top_start, inv_q, 2 * k);
    const F bottom_start = pow(q, 4 * n - 2 * k - 1);
    if (j % 2 == 0) {
      out.push_back(top / generic::pochhammer(bottom_start, inv_q_sq, k) * generic::qbinom(n, k, q_sq));
    } else {
      out.push_back((one + a) * top / generic::pochhammer(bottom_start, inv_q_sq, k + 1) *
                    generic::qbinom(n, k + 1, q_sq) * (one - pow(q, 2 * (k + 1))));
    }
  }
  return out;
}

/// a_j^{(n)} with the zero convention outside 0..2n.
template <class F> F expansion_at(const std::vector<F> &coeffs, int j) {
  if (j < 0 || j >= static_cast<int>(coeffs.size()))
    return F(0);
  return coeffs[static_cast<std::size_t>(j)];
}

template <class F> struct FiveTermResult {
  F rhs;
  /// Set when a b/lambda subscript falls below its domain while its
  /// multiplying expansion coefficient is in range.
  std::optional<std::string> diagnostic;
};

/// Right-hand side of the relation expressing a_k^{(n+1)} through the
/// a_j^{(n)} via (x^2 - a^2 q^{2n}) pi_n and two applications of the
/// three-term recurrence. Terms whose a_j^{(n)} index is out of range are
/// skipped without touching b or lambda. lambda_m enters the s_m
/// coefficient through lambda_m x s_{m-1}, which vanishes for m = 0
/// since s_{-1} = 0.
template <class F>
FiveTermResult<F> five_term_rhs(int n, int k, const F &q, const F &a, const Recurrence<F> &rec,
                                const std::vector<F> &coeffs) {
  const int top = 2 * n;
  auto in_range = [&](int j) { return j >= 0 && j <= top; };
  std::optional<std::string> diag;
  auto b = [&](int m) -> F {
    if (m < 0) {
      diag = "b_" + std::to_string(m) + " referenced with nonzero multiplier";
      return F(0);
    }
    return rec.b(m);
  };
  auto lambda = [&](int m, bool vanishes_at_zero) -> F {
    if (m == 0 && vanishes_at_zero)
      return F(0);
    if (m < 1) {
      diag = "lambda_" + std::to_string(m) + " referenced with nonzero multiplier";
      return F(0);
    }
    return rec.lambda(m);
  };

  const int m = top - k; // s_{2n+2-k} is the target basis element
  F rhs = expansion_at(coeffs, k);
  if (in_range(k - 1))
    rhs += (b(m + 2) + b(m + 1)) * coeffs[static_cast<std::size_t>(k - 1)];
  if (in_range(k - 2)) {
    const F bb = b(m + 2);
    rhs += (lambda(m + 3, false) + bb * bb + lambda(m + 2, true) - a * a * pow(q, 2 * n)) *
           coeffs[static_cast<std::size_t>(k - 2)];
  }
  if (in_range(k - 3)) {
    const F lam = lambda(m + 3, false);
    rhs += (b(m + 3) * lam + lam * b(m + 2)) * coeffs[static_cast<std::size_t>(k - 3)];
  }
  if (in_range(k - 4))
    rhs += lambda(m + 4, false) * lambda(m + 3, false) * coeffs[static_cast<std::size_t>(k - 4)];
  return {std::move(rhs), std::move(diag)};
}

} // namespace generic

struct ExpansionTable {
  int n = 0;
  std::vector<Rational> coeffs;

  /// a_j^{(n)}, zero outside 0..2n.
  Rational at(int j) const { return generic::expansion_at(coeffs, j); }
};

ExpansionTable expansion_coeffs(int n, const QPoint &point);

/// pi_n == sum_k a_k^{(n)} s_{2n-k}, all coefficients compared exactly.
bool check_expansion(int n, const QPoint &point);

struct InductionCheck {
  Rational lhs; // a_k^{(n+1)}
  Rational rhs;
  std::optional<std::string> diagnostic;
  bool holds() const { return !diagnostic && lhs == rhs; }
};

InductionCheck induction_step(int n, int k, const QPoint &point);
bool check_induction_step(int n, int k, const QPoint &point);

/// (i) a_{2n}^{(n)} closed form, (ii) for n >= 1 the constant term of
/// x pi_n, (iii) mu_j == P_j(a) for j <= 2n+1.
bool check_theorem(int n, const QPoint &point);

} // namespace cigler
