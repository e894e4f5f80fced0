#include <doctest.h>

#include "cigler/error.hpp"
#include "cigler/identities.hpp"
#include "cigler/moments.hpp"
#include "cigler/verify.hpp"

using namespace cigler;

namespace {

Rational r(long p, long q = 1) { return Rational(mpz_class(p), mpz_class(q)); }

const QPoint kHalfTwo = QPoint::make(r(1, 2), r(2));

} // namespace

TEST_CASE("moment table examples") {
  const auto t = moments(6, kHalfTwo);
  // mu_0..mu_6 frozen from the linear-solve oracle in tests/oracle/derive_fixtures.py.
  const std::vector<Rational> expected{r(1), r(6), r(16), r(312, 7), r(712, 7), r(49632, 217), r(104752, 217)};
  CHECK(t.mu == expected);
  CHECK(t.nu[1][1] == r(-20));
  CHECK(t.nu[2][1] == r(-360, 7));
}

TEST_CASE("moment table at a negative q") {
  const QPoint pt = QPoint::make(r(-3, 5), r(7, 4));
  const std::vector<Rational> expected{r(1), r(55, 32), r(381, 128), r(400675, 77824), r(2785889, 311296),
                                       r(65249526375, 4193779712)};
  CHECK(moments(5, pt).mu == expected);
}

TEST_CASE("moment table invariants") {
  for (const auto &pt : sample_points(5, 8, 1000)) {
    const auto t = moments(12, pt);
    CHECK(t.mu.front() == r(1));
    CHECK(t.mu[1] == coeff_b(0, pt));
    for (int k = 1; k <= 12; ++k)
      CHECK(t.nu[0][static_cast<std::size_t>(k)].is_zero());
    for (int n = 0; n <= 12; ++n)
      CHECK(t.nu[static_cast<std::size_t>(n)].size() == static_cast<std::size_t>(13 - n));
  }
}

TEST_CASE("moments via basis") {
  CHECK(moments_via_basis(0, kHalfTwo) == std::vector<Rational>{r(1)});
  CHECK(moments_via_basis(3, kHalfTwo) == std::vector<Rational>{r(1), r(6), r(16), r(312, 7)});
}

TEST_CASE("change of basis reconstructs x^n") {
  const auto s = generic::s_polynomials(recurrence_table(8, kHalfTwo), 8);
  const auto c = generic::powers_in_s_basis(s);
  for (int n = 0; n <= 8; ++n) {
    Polynomial sum;
    for (int k = 0; k <= n; ++k)
      sum += s[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    std::vector<Rational> xn(static_cast<std::size_t>(n + 1), r(0));
    xn.back() = r(1);
    CHECK(sum == Polynomial(xn));
  }
}

TEST_CASE("moments agree with the basis oracle and annihilate s_n") {
  for (const auto &pt : sample_points(5, 13, 1000)) {
    const auto t = moments(24, pt);
    CHECK(t.mu == moments_via_basis(24, pt));
    const auto s = generic::s_polynomials(recurrence_table(24, pt), 24);
    for (int n = 0; n <= 24; ++n)
      CHECK(generic::apply_functional(s[static_cast<std::size_t>(n)], t.mu) == r(n == 0 ? 1 : 0));
  }
}

TEST_CASE("P_n examples") {
  CHECK(cigler_P(0, kHalfTwo) == r(1));
  CHECK(cigler_P(2, kHalfTwo) == r(16));
  CHECK(cigler_P(3, kHalfTwo) == r(312, 7));
  CHECK(cigler_P(2, QPoint::make(r(1, 2), r(4))) == r(46));
}

TEST_CASE("conjecture: mu_n equals P_n(a)") {
  for (const auto &pt : sample_points(6, 21, 1000)) {
    const auto t = moments(24, pt);
    for (int n = 0; n <= 24; ++n)
      CHECK(t.mu[static_cast<std::size_t>(n)] == cigler_P(n, pt));
  }
}

TEST_CASE("product basis examples") {
  CHECK(pi_product(0, kHalfTwo) == Polynomial{r(1)});
  CHECK(pi_product(1, QPoint::make(r(7, 3), r(2))) == Polynomial{r(-4), r(0), r(1)});
  CHECK(pi_product(2, kHalfTwo) == Polynomial{r(-4), r(0), r(1)} * Polynomial{r(-1), r(0), r(1)});
}

TEST_CASE("L on the product basis") {
  CHECK(L_pi(0, 0, kHalfTwo, LpiMethod::closed) == r(1));
  CHECK(L_pi(0, 0, kHalfTwo, LpiMethod::direct) == r(1));
  CHECK(L_pi(1, 0, kHalfTwo, LpiMethod::closed) == r(12));
  CHECK(L_pi(1, 0, kHalfTwo, LpiMethod::direct) == r(12));
  CHECK(L_pi(1, 1, kHalfTwo, LpiMethod::closed) == r(144, 7));
  CHECK(L_pi(1, 1, kHalfTwo, LpiMethod::direct) == r(144, 7));
  CHECK_THROWS_AS(L_pi(1, 2, kHalfTwo, LpiMethod::closed), InvalidInput);
  for (const auto &pt : sample_points(4, 17, 1000))
    for (int n = 0; n <= 10; ++n)
      for (int eps = 0; eps <= 1; ++eps)
        CHECK(L_pi(n, eps, pt, LpiMethod::closed) == L_pi(n, eps, pt, LpiMethod::direct));
}

TEST_CASE("direct L_pi equals L applied to the product polynomial") {
  for (const auto &pt : sample_points(3, 19, 500)) {
    const auto mu = moments(21, pt).mu;
    for (int n = 0; n <= 10; ++n) {
      const auto p = pi_product(n, pt);
      CHECK(generic::apply_functional(p, mu) == L_pi(n, 0, pt, LpiMethod::direct));
      CHECK(generic::apply_functional(p.shift_mul_x(), mu) == L_pi(n, 1, pt, LpiMethod::direct));
    }
  }
}
