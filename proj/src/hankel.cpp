#include "cigler/hankel.hpp"

#include <utility>

#include "cigler/error.hpp"

namespace cigler {

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto &row : m)
    if (row.size() != n)
      throw InvalidInput("determinant of a non-square matrix");
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero())
      ++pivot;
    if (pivot == n)
      return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero())
        continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c)
        m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

HankelResult hankel_check(int n, const QPoint &point, HankelEntries entries) {
  if (n < 0)
    throw InvalidInput("hankel size must be non-negative");
  if (auto why = QPoint::violation(point.q, point.a))
    throw InvalidInput("inadmissible point " + to_string(point) + ": " + *why);
  const RecurrenceTable rec(point.q, point.a, 2 * n);
  std::vector<Rational> values;
  if (entries == HankelEntries::moments) {
    values = generic::moment_table(rec, 2 * n).mu;
  } else {
    for (int j = 0; j <= 2 * n; ++j)
      values.push_back(generic::cigler_P(j, point.q, point.a));
  }
  HankelResult out;
  out.determinant = determinant(generic::hankel_matrix(values, n));
  out.product = generic::hankel_product(rec, n);
  out.equal = out.determinant == out.product;
  return out;
}

} // namespace cigler
