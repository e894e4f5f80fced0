#pragma once

#include <stdexcept>

#include "cigler/point.hpp"
#include "cigler/rational.hpp"

namespace cigler {

namespace generic {

/// [n]_q = (1 - q^n) / (1 - q).
template <class F> F qint(int n, const F &q) { return (F(1) - pow(q, n)) / (F(1) - q); }

/// (start; base)_length as an explicit finite product.
template <class F> F pochhammer(const F &start, const F &base, int length) {
  F out(1);
  F term = start;
  for (int j = 0; j < length; ++j) {
    out *= F(1) - term;
    term *= base;
  }
  return out;
}

/// Gaussian binomial [n k]_base; zero outside 0 <= k <= n.
template <class F> F qbinom(int n, int k, const F &base) {
  if (k < 0 || k > n)
    return F(0);
  return pochhammer(base, base, n) / (pochhammer(base, base, k) * pochhammer(base, base, n - k));
}

inline long choose2(long p) { return p * (p - 1) / 2; }

} // namespace generic

struct PochhammerSpec {
  Rational start;
  Rational base;
  int length = 0;
};

Rational qint(int n, const Rational &q);
Rational pochhammer(const PochhammerSpec &spec);
Rational qbinom(int n, int k, const Rational &base);

/// Sum_{p=0}^{m} [m p]_q q^{C(p,2)} a^p == (-a; q)_m.
bool check_qbinomial_theorem(int m, const QPoint &point);

/// Sum_{k=0}^{floor(p/2)} (-1)^k q^{2C(k,2)} / ((q^2;q^2)_k (q;q)_{p-2k})
///   == q^{C(p,2)} / (q;q)_p.
bool check_qvandermonde_limit(int p, const Rational &q);

} // namespace cigler
