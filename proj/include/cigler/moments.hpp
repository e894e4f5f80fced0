#pragma once

#include <vector>

#include "cigler/qseries.hpp"
#include "cigler/recurrence.hpp"

namespace cigler {

namespace generic {

/// nu[n][k] = L(x^n s_k) for 0 <= k <= upto - n; mu[n] = nu[n][0].
template <class F> struct MomentTable {
  int upto = 0;
  std::vector<std::vector<F>> nu;
  std::vector<F> mu;
};

/// Fills nu by nu_{n+1,k} = nu_{n,k+1} + b_k nu_{n,k} + lambda_k nu_{n,k-1},
/// starting from nu_{0,k} = [k == 0]. Needs rec.upto() >= upto - 1.
template <class F> MomentTable<F> moment_table(const Recurrence<F> &rec, int upto) {
  MomentTable<F> t;
  t.upto = upto;
  t.nu.resize(static_cast<std::size_t>(upto + 1));
  t.nu[0].assign(static_cast<std::size_t>(upto + 1), F(0));
  t.nu[0][0] = F(1);
  for (int n = 0; n < upto; ++n) {
    const auto &prev = t.nu[static_cast<std::size_t>(n)];
    auto &next = t.nu[static_cast<std::size_t>(n + 1)];
    const int width = upto - n - 1;
    next.reserve(static_cast<std::size_t>(width + 1));
    for (int k = 0; k <= width; ++k) {
      F v = prev[static_cast<std::size_t>(k + 1)] + rec.b(k) * prev[static_cast<std::size_t>(k)];
      if (k >= 1)
        v += rec.lambda(k) * prev[static_cast<std::size_t>(k - 1)];
      next.push_back(std::move(v));
    }
  }
  t.mu.reserve(static_cast<std::size_t>(upto + 1));
  for (const auto &row : t.nu)
    t.mu.push_back(row.front());
  return t;
}

/// Row n holds c_{n,k} with x^n = sum_k c_{n,k} s_k, solved by
/// back-substitution using monicity of s_n.
template <class F>
std::vector<std::vector<F>> powers_in_s_basis(const std::vector<BasicPolynomial<F>> &s) {
  std::vector<std::vector<F>> c;
  c.reserve(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) {
    std::vector<F> row(n + 1, F(0));
    row[n] = F(1);
    // x^n = s_n - sum_{j<n} coeff_j(s_n) x^j
    for (std::size_t j = 0; j < n; ++j) {
      const F sj = s[n].coeff(static_cast<int>(j));
      if (detail::scalar_is_zero(sj))
        continue;
      for (std::size_t k = 0; k <= j; ++k)
        row[k] -= sj * c[j][k];
    }
    c.push_back(std::move(row));
  }
  return c;
}

template <class F> std::vector<F> moments_via_basis(const std::vector<BasicPolynomial<F>> &s) {
  std::vector<F> mu;
  for (auto &row : powers_in_s_basis(s))
    mu.push_back(row.front());
  return mu;
}

/// Applies L to p given moments mu (mu.size() > deg p).
template <class F> F apply_functional(const BasicPolynomial<F> &p, const std::vector<F> &mu) {
  F acc(0);
  for (int j = 0; j <= p.degree(); ++j)
    acc += p.coeff(j) * mu[static_cast<std::size_t>(j)];
  return acc;
}

/// P_n(a) = (q; q^2)_{floor((n+1)/2)}^{-1} sum_k [n k]_q a^k.
template <class F> F cigler_P(int n, const F &q, const F &a) {
  F sum(0);
  F a_pow(1);
  for (int k = 0; k <= n; ++k) {
    sum += generic::qbinom(n, k, q) * a_pow;
    a_pow *= a;
  }
  return sum / generic::pochhammer(q, q * q, (n + 1) / 2);
}

/// prod_{i=0}^{n-1} (x^2 - a^2 q^{2i}).
template <class F> BasicPolynomial<F> pi_product(int n, const F &q, const F &a) {
  auto out = BasicPolynomial<F>::constant(F(1));
  const F a_sq = a * a;
  for (int i = 0; i < n; ++i)
    out = out * BasicPolynomial<F>({-(a_sq * pow(q, 2 * i)), F(0), F(1)});
  return out;
}

/// (-a; q)_{2n+eps} / (q; q^2)_{n+eps}.
template <class F> F L_pi_closed(int n, int eps, const F &q, const F &a) {
  return generic::pochhammer(-a, q, 2 * n + eps) / generic::pochhammer(q, q * q, n + eps);
}

/// sum_k [n k]_{q^2} (-1)^k a^{2k} q^{2C(k,2)} mu_{2(n-k)+eps}.
template <class F> F L_pi_direct(int n, int eps, const F &q, const F &a, const std::vector<F> &mu) {
  const F q_sq = q * q;
  F acc(0);
  for (int k = 0; k <= n; ++k) {
    F term = generic::qbinom(n, k, q_sq) * pow(a, 2 * k) * pow(q, 2 * generic::choose2(k)) *
             mu[static_cast<std::size_t>(2 * (n - k) + eps)];
    if (k % 2 == 1)
      term = -term;
    acc += term;
  }
  return acc;
}

} // namespace generic

using MomentTable = generic::MomentTable<Rational>;

enum class LpiMethod { closed, direct };

MomentTable moments(int upto, const QPoint &point);
std::vector<Rational> moments_via_basis(int upto, const QPoint &point);
Rational cigler_P(int n, const QPoint &point);
Polynomial pi_product(int n, const QPoint &point);

/// L(x^eps * pi_n).
Rational L_pi(int n, int eps, const QPoint &point, LpiMethod method);

} // namespace cigler
