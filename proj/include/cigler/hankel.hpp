#pragma once

#include <vector>

#include "cigler/moments.hpp"

namespace cigler {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant by rational Gaussian elimination with row swaps on
/// zero pivots; a column with no nonzero pivot gives 0.
Rational determinant(RationalMatrix matrix);

namespace generic {

/// Hankel matrix (entries[i + j])_{0 <= i,j <= n}.
template <class F> std::vector<std::vector<F>> hankel_matrix(const std::vector<F> &entries, int n) {
  std::vector<std::vector<F>> m(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      m[static_cast<std::size_t>(i)].push_back(entries[static_cast<std::size_t>(i + j)]);
  return m;
}

/// prod_{i=1}^{n} lambda_i^{n+1-i}.
template <class F> F hankel_product(const Recurrence<F> &rec, int n) {
  F out(1);
  for (int i = 1; i <= n; ++i)
    out *= pow(rec.lambda(i), n + 1 - i);
  return out;
}

} // namespace generic

enum class HankelEntries { cigler_P, moments };

struct HankelResult {
  Rational determinant;
  Rational product;
  bool equal = false;
};

HankelResult hankel_check(int n, const QPoint &point, HankelEntries entries = HankelEntries::cigler_P);

} // namespace cigler
