#include <random>

#include <doctest.h>

#include "cigler/algebra.hpp"
#include "cigler/error.hpp"

using namespace cigler;

namespace {

Rational r(long p, long q = 1) { return Rational(mpz_class(p), mpz_class(q)); }

struct Gen {
  std::mt19937_64 rng{20261015};
  Rational rational() {
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
    return r(num(rng), den(rng));
  }
  Polynomial poly() {
    std::uniform_int_distribution<int> deg(0, 4);
    std::vector<Rational> c;
    for (int i = deg(rng); i >= 0; --i)
      c.push_back(rational());
    return Polynomial(c);
  }
};

} // namespace

TEST_CASE("rational arithmetic examples") {
  CHECK(r(1, 2) + r(1, 3) == r(5, 6));
  CHECK(pow(r(1, 2), -1) == r(2));
  const Rational zero = r(7, 8) * r(0);
  CHECK(zero.is_zero());
  CHECK(zero.denominator() == 1);
  CHECK(zero.to_string() == "0");
  CHECK(r(6, -4).to_string() == "-3/2");
  CHECK(r(3, 9).denominator() == 3);
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(r(1) / r(0), InvalidInput);
  CHECK_THROWS_AS(pow(r(0), -2), InvalidInput);
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), InvalidInput);
  CHECK(pow(r(0), 0) == r(1));
}

TEST_CASE("rational text format") {
  CHECK(Rational::parse("-12/18") == r(-2, 3));
  CHECK(Rational::parse("5") == r(5));
  CHECK(Rational::parse("0/7").is_zero());
  for (const char *bad : {"", "1/", "/2", "1/0", "1/-2", "+3", "1.5", " 1", "a/b", "--1"})
    CHECK_THROWS_AS(Rational::parse(bad), InvalidInput);
  Gen g;
  for (int i = 0; i < 50; ++i) {
    const Rational x = g.rational();
    CHECK(Rational::parse(x.to_string()) == x);
  }
}

TEST_CASE("rational field axioms on random inputs") {
  Gen g;
  for (int i = 0; i < 200; ++i) {
    const Rational x = g.rational(), y = g.rational(), z = g.rational();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    if (!y.is_zero())
      CHECK((x / y) * y == x);
    CHECK(gcd(x.numerator(), x.denominator()) == 1);
    CHECK(x.denominator() > 0);
  }
}

TEST_CASE("polynomial arithmetic examples") {
  const Polynomial x_minus_1{r(-1), r(1)}, x_plus_1{r(1), r(1)};
  CHECK(x_minus_1 * x_plus_1 == Polynomial{r(-1), r(0), r(1)});
  CHECK(Polynomial{r(0), r(1), r(1)} * r(1, 2) == Polynomial{r(0), r(1, 2), r(1, 2)});
  CHECK(Polynomial{r(2), r(1)}.shift_mul_x() == Polynomial{r(0), r(2), r(1)});
  CHECK(Polynomial{r(-1), r(0), r(1)}.eval(r(2)) == r(3));
  CHECK(Polynomial{}.eval(r(5)).is_zero());
  CHECK(Polynomial{r(-4), r(0), r(1)}.eval(r(2)).is_zero());
}

TEST_CASE("polynomial canonical form") {
  const Polynomial p{r(1), r(2), r(0), r(0)};
  CHECK(p.degree() == 1);
  CHECK(Polynomial{r(0), r(0)}.is_zero());
  CHECK(Polynomial{r(0), r(0)}.degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(Polynomial(p.coefficients()) == p);
  CHECK(p.coeff(7).is_zero());
  CHECK(p.coeff(-1).is_zero());
}

TEST_CASE("polynomial ring axioms and evaluation homomorphism") {
  Gen g;
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = g.poly(), q = g.poly(), s = g.poly();
    const Rational x0 = g.rational();
    CHECK((p + q) + s == p + (q + s));
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * q == q * p);
    CHECK(p * (q + s) == p * q + p * s);
    CHECK((p * q).eval(x0) == p.eval(x0) * q.eval(x0));
    CHECK((p + q).eval(x0) == p.eval(x0) + q.eval(x0));
    CHECK(p.shift_mul_x() == p * Polynomial::x());
  }
}

TEST_CASE("laurent arithmetic examples") {
  const LaurentPolynomial t_plus_inv{{-1, r(1)}, {1, r(1)}};
  const LaurentPolynomial t{{1, r(1)}};
  CHECK(t_plus_inv * t == LaurentPolynomial{{0, r(1)}, {2, r(1)}});
  const auto cancelled = LaurentPolynomial{{-1, r(1)}} + LaurentPolynomial{{-1, r(-1)}};
  CHECK(cancelled.is_zero());
  CHECK(cancelled.size() == 0);
  CHECK(LaurentPolynomial{{2, r(1)}, {-2, r(1)}} * r(1, 2) ==
        LaurentPolynomial{{2, r(1, 2)}, {-2, r(1, 2)}});
  CHECK((t_plus_inv * r(0)).is_zero());
  CHECK(t_plus_inv.eval(r(2)) == r(5, 2));
  CHECK(t_plus_inv.shifted(1) == t_plus_inv * t);
}
