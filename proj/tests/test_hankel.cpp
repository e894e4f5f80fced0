#include <random>

#include <doctest.h>

#include "cigler/error.hpp"
#include "cigler/hankel.hpp"
#include "cigler/verify.hpp"

using namespace cigler;

namespace {

Rational r(long p, long q = 1) { return Rational(mpz_class(p), mpz_class(q)); }

const QPoint kHalfTwo = QPoint::make(r(1, 2), r(2));

// Cofactor expansion; exponential but fine for tiny matrices.
Rational cofactor_det(const RationalMatrix &m) {
  if (m.size() == 1)
    return m[0][0];
  Rational det(0);
  for (std::size_t c = 0; c < m.size(); ++c) {
    RationalMatrix minor;
    for (std::size_t i = 1; i < m.size(); ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < m.size(); ++j)
        if (j != c)
          row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const Rational term = m[0][c] * cofactor_det(minor);
    det += c % 2 == 0 ? term : -term;
  }
  return det;
}

} // namespace

TEST_CASE("determinant edge cases") {
  CHECK(determinant(RationalMatrix{}) == r(1));
  CHECK(determinant(RationalMatrix{{r(0), r(1)}, {r(1), r(0)}}) == r(-1));
  CHECK(determinant(RationalMatrix{{r(0), r(1)}, {r(0), r(2)}}) == r(0));
  CHECK(determinant(RationalMatrix{{r(1), r(2)}, {r(2), r(4)}}) == r(0));
  CHECK_THROWS_AS(determinant(RationalMatrix{{r(1), r(2)}}), InvalidInput);
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    RationalMatrix m(n);
    for (auto &row : m)
      for (std::size_t j = 0; j < n; ++j)
        row.push_back(trial % 3 == 0 && j == 0 ? r(0) : r(num(rng), den(rng)));
    CHECK(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("hankel examples") {
  const auto h0 = hankel_check(0, kHalfTwo);
  CHECK(h0.determinant == r(1));
  CHECK(h0.product == r(1));
  CHECK(h0.equal);
  const auto h1 = hankel_check(1, kHalfTwo);
  CHECK(h1.determinant == r(-20));
  CHECK(h1.product == r(-20));
  CHECK(h1.equal);
  // Frozen from sympy's Berkowitz determinant in tests/oracle/derive_fixtures.py.
  CHECK(hankel_check(2, kHalfTwo).determinant == r(21600, 49));
  CHECK(hankel_check(3, kHalfTwo).determinant == r(23794560000, 2307361));
}

TEST_CASE("hankel determinant equals the lambda product") {
  for (const auto &pt : sample_points(10, 53, 1000))
    for (int n = 0; n <= 8; ++n) {
      const auto h = hankel_check(n, pt);
      CHECK(h.equal);
      CHECK(h.determinant == hankel_check(n, pt, HankelEntries::moments).determinant);
    }
}

TEST_CASE("degenerate a = -q gives vanishing determinants") {
  for (const auto &q : {r(1, 3), r(-2, 5), r(7, 2)}) {
    const QPoint pt = QPoint::make(q, -q);
    CHECK(coeff_lambda(1, pt).is_zero());
    CHECK(hankel_check(0, pt).determinant == r(1));
    for (int n = 1; n <= 8; ++n) {
      const auto h = hankel_check(n, pt);
      CHECK(h.determinant.is_zero());
      CHECK(h.product.is_zero());
      CHECK(h.equal);
    }
  }
}
