#pragma once

#include "cigler/algebra.hpp"
#include "cigler/qseries.hpp"

namespace cigler {

namespace generic {

/// H_n(t) = sum_k [n k]_q t^{2k-n}, with t standing for e^{i theta}.
template <class F> BasicLaurent<F> hermite_laurent(int n, const F &q) {
  BasicLaurent<F> out;
  for (int k = 0; k <= n; ++k)
    out.add_term(2 * k - n, generic::qbinom(n, k, q));
  return out;
}

} // namespace generic

struct HermiteLaurent {
  int n = 0;
  LaurentPolynomial poly;
};

HermiteLaurent hermite_laurent(int n, const Rational &q);

/// H_{n+1} == (t + 1/t) H_n - (1 - q^n) H_{n-1} as Laurent polynomials.
bool check_hermite_recurrence(int n, const Rational &q);

/// (q; q^2)_{floor((n+1)/2)} P_n(t0^2) == t0^n H_n(t0).
bool check_connection(int n, const Rational &t0, const Rational &q);

} // namespace cigler
