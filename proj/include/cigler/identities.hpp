#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cigler/expansion.hpp"
#include "cigler/hankel.hpp"
#include "cigler/qhermite.hpp"

namespace cigler {

/// One scalar equation lhs == rhs produced by an identity at a fixed index.
/// A defect marks a structural failure (e.g. an undefined subscript) that
/// fails the check regardless of the values.
template <class F> struct Residual {
  std::string label;
  F lhs;
  F rhs;
  std::optional<std::string> defect;
};

template <class F> using Residuals = std::vector<Residual<F>>;

inline bool holds(const Residual<Rational> &r) { return !r.defect && r.lhs == r.rhs; }

inline bool all_hold(const Residuals<Rational> &rs) {
  for (const auto &r : rs)
    if (!holds(r))
      return false;
  return true;
}

/// Every identity is written once over a generic scalar field so that the
/// same expression tree is evaluated exactly (F = Rational) and bounded in
/// degree for grid proofs (F = DegreeBudget). The second parameter is a for
/// the orthogonal-polynomial identities and t0 for the q-Hermite ones.
namespace identity {

template <class F> Residuals<F> moments_equal_P(int n, const F &q, const F &a, const Mutation &mut) {
  const generic::Recurrence<F> rec(q, a, n, mut);
  const auto table = generic::moment_table(rec, n);
  return {{"mu_" + std::to_string(n), table.mu.back(), generic::cigler_P(n, q, a), std::nullopt}};
}

template <class F> Residuals<F> basis_oracle(int n, const F &q, const F &a, const Mutation &mut) {
  const generic::Recurrence<F> rec(q, a, n, mut);
  const auto table = generic::moment_table(rec, n);
  const auto via_basis = generic::moments_via_basis(generic::s_polynomials(rec, n));
  return {{"mu_" + std::to_string(n), table.mu.back(), via_basis.back(), std::nullopt}};
}

template <class F> Residuals<F> annihilation(int n, const F &q, const F &a, const Mutation &mut) {
  const generic::Recurrence<F> rec(q, a, n, mut);
  const auto table = generic::moment_table(rec, n);
  const auto s = generic::s_polynomials(rec, n);
  return {{"L(s_" + std::to_string(n) + ")", generic::apply_functional(s.back(), table.mu),
           F(n == 0 ? 1 : 0), std::nullopt}};
}

template <class F> Residuals<F> expansion(int n, const F &q, const F &a, const Mutation &mut) {
  const generic::Recurrence<F> rec(q, a, 2 * n, mut);
  const auto s = generic::s_polynomials(rec, 2 * n);
  const auto coeffs = generic::expansion_coeffs(n, q, a);
  BasicPolynomial<F> rhs;
  for (int k = 0; k <= 2 * n; ++k)
    rhs += s[static_cast<std::size_t>(2 * n - k)] * coeffs[static_cast<std::size_t>(k)];
  const auto lhs = generic::pi_product(n, q, a);
  Residuals<F> out;
  for (int j = 0; j <= 2 * n; ++j)
    out.push_back({"x^" + std::to_string(j), lhs.coeff(j), rhs.coeff(j), std::nullopt});
  if (rhs.degree() > 2 * n)
    out.push_back({"degree", F(rhs.degree()), F(2 * n), std::string("right side exceeds degree 2n")});
  return out;
}

template <class F> Residuals<F> induction(int n, const F &q, const F &a, const Mutation &mut) {
  const generic::Recurrence<F> rec(q, a, 2 * n + 1, mut);
  const auto current = generic::expansion_coeffs(n, q, a);
  const auto next = generic::expansion_coeffs(n + 1, q, a);
  Residuals<F> out;
  for (int k = 0; k <= 2 * n + 2; ++k) {
    auto r = generic::five_term_rhs(n, k, q, a, rec, current);
    out.push_back({"k=" + std::to_string(k), next[static_cast<std::size_t>(k)], std::move(r.rhs),
                   std::move(r.diagnostic)});
  }
  return out;
}

template <class F> Residuals<F> theorem_top(int n, const F &q, const F &a, const Mutation &) {
  const auto coeffs = generic::expansion_coeffs(n, q, a);
  return {{"a_2n", coeffs.back(), generic::L_pi_closed(n, 0, q, a), std::nullopt}};
}

template <class F> Residuals<F> theorem_odd(int n, const F &q, const F &a, const Mutation &mut) {
  const generic::Recurrence<F> rec(q, a, 1, mut);
  const auto coeffs = generic::expansion_coeffs(n, q, a);
  const F lhs = coeffs[static_cast<std::size_t>(2 * n)] * rec.b(0) +
                generic::expansion_at(coeffs, 2 * n - 1) * rec.lambda(1);
  return {{"a_2n b_0 + a_2n-1 lambda_1", lhs, generic::L_pi_closed(n, 1, q, a), std::nullopt}};
}

template <class F> Residuals<F> theorem_moments(int n, const F &q, const F &a, const Mutation &mut) {
  const int top = 2 * n + 1;
  const generic::Recurrence<F> rec(q, a, top, mut);
  const auto table = generic::moment_table(rec, top);
  Residuals<F> out;
  for (int j = 0; j <= top; ++j)
    out.push_back({"mu_" + std::to_string(j), table.mu[static_cast<std::size_t>(j)],
                   generic::cigler_P(j, q, a), std::nullopt});
  return out;
}

template <class F> Residuals<F> hankel(int n, const F &q, const F &a, const Mutation &mut) {
  const generic::Recurrence<F> rec(q, a, n, mut);
  std::vector<F> entries;
  for (int j = 0; j <= 2 * n; ++j)
    entries.push_back(generic::cigler_P(j, q, a));
  return {{"det", determinant(generic::hankel_matrix(entries, n)), generic::hankel_product(rec, n),
           std::nullopt}};
}

template <class F> Residuals<F> newmoms(int n, const F &q, const F &a, const Mutation &mut) {
  const int top = 2 * n + 1;
  const generic::Recurrence<F> rec(q, a, top, mut);
  const auto table = generic::moment_table(rec, top);
  Residuals<F> out;
  for (int eps = 0; eps <= 1; ++eps)
    out.push_back({"eps=" + std::to_string(eps), generic::L_pi_direct(n, eps, q, a, table.mu),
                   generic::L_pi_closed(n, eps, q, a), std::nullopt});
  return out;
}

template <class F> Residuals<F> qbinomial_theorem(int m, const F &q, const F &a, const Mutation &) {
  F lhs(0);
  for (int p = 0; p <= m; ++p)
    lhs += generic::qbinom(m, p, q) * pow(q, generic::choose2(p)) * pow(a, p);
  return {{"m=" + std::to_string(m), lhs, generic::pochhammer(-a, q, m), std::nullopt}};
}

template <class F> Residuals<F> qvandermonde_limit(int p, const F &q, const F &, const Mutation &) {
  const F q_sq = q * q;
  F lhs(0);
  for (int k = 0; 2 * k <= p; ++k) {
    F term = pow(q, 2 * generic::choose2(k)) /
             (generic::pochhammer(q_sq, q_sq, k) * generic::pochhammer(q, q, p - 2 * k));
    if (k % 2 == 1)
      term = -term;
    lhs += term;
  }
  return {{"p=" + std::to_string(p), lhs, pow(q, generic::choose2(p)) / generic::pochhammer(q, q, p),
           std::nullopt}};
}

template <class F> Residuals<F> hermite_palindromic(int n, const F &q, const F &, const Mutation &) {
  const auto h = generic::hermite_laurent(n, q);
  Residuals<F> out;
  for (int k = 0; 2 * k < n; ++k)
    out.push_back({"t^" + std::to_string(2 * k - n), h.coeff(2 * k - n), h.coeff(n - 2 * k), std::nullopt});
  return out;
}

template <class F> Residuals<F> hermite_recurrence(int n, const F &q, const F &, const Mutation &) {
  const auto next = generic::hermite_laurent(n + 1, q);
  const auto cur = generic::hermite_laurent(n, q);
  const auto prev = generic::hermite_laurent(n - 1, q);
  const BasicLaurent<F> t_plus_inv{{-1, F(1)}, {1, F(1)}};
  const auto rhs = t_plus_inv * cur - prev * (F(1) - pow(q, n));
  Residuals<F> out;
  for (int e = -(n + 1); e <= n + 1; ++e)
    out.push_back({"t^" + std::to_string(e), next.coeff(e), rhs.coeff(e), std::nullopt});
  return out;
}

template <class F> Residuals<F> hermite_connection(int n, const F &q, const F &t0, const Mutation &) {
  const F lhs = generic::pochhammer(q, q * q, (n + 1) / 2) * generic::cigler_P(n, q, t0 * t0);
  const F rhs = pow(t0, n) * generic::hermite_laurent(n, q).eval(t0);
  return {{"n=" + std::to_string(n), lhs, rhs, std::nullopt}};
}

/// sum_k [n k]_q t^{2k} == t^n H_n(t), coefficient by coefficient.
template <class F> Residuals<F> hermite_laurent_identity(int n, const F &q, const F &, const Mutation &) {
  BasicLaurent<F> lhs;
  for (int k = 0; k <= n; ++k)
    lhs.add_term(2 * k, generic::qbinom(n, k, q));
  const auto rhs = generic::hermite_laurent(n, q).shifted(n);
  Residuals<F> out;
  for (int e = 0; e <= 2 * n; ++e)
    out.push_back({"t^" + std::to_string(e), lhs.coeff(e), rhs.coeff(e), std::nullopt});
  return out;
}

} // namespace identity

} // namespace cigler
