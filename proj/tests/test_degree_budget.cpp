#include <doctest.h>

#include "cigler/degree_budget.hpp"
#include "cigler/error.hpp"
#include "cigler/identities.hpp"
#include "cigler/verify.hpp"

using namespace cigler;

namespace {

const DegreeBudget q = DegreeBudget::variable_q();
const DegreeBudget a = DegreeBudget::variable_a();

bool same(Degree x, Degree y) { return x.q == y.q && x.a == y.a; }

// prod_{i<dq} (q - (2+i)) * prod_{j<da} (a - (2+j)): vanishes on every point of
// the (dq)x(da) corner of the proof grid but not at q = 2+dq, a = 2+da.
template <class F> F corner_product(const F &qv, const F &av, int dq, int da) {
  F out(1);
  for (int i = 0; i < dq; ++i)
    out *= qv - F(2 + i);
  for (int j = 0; j < da; ++j)
    out *= av - F(2 + j);
  return out;
}

} // namespace

TEST_CASE("monomials stay exact") {
  CHECK(same(q.numerator_bound(), {1, 0}));
  CHECK(same(pow(q, -2).numerator_bound(), {0, 0}));
  CHECK(same(pow(q, -2).denominator_degree(), {2, 0}));
  CHECK(same((pow(q, 3) * pow(q, -1) * a).numerator_bound(), {2, 1}));
  CHECK(same((pow(q, 3) / (q * a)).denominator_degree(), {0, 1}));
  CHECK(DegreeBudget(0).structurally_zero());
  CHECK(!DegreeBudget(3).structurally_zero());
  CHECK_THROWS_AS(q / DegreeBudget(0), InvalidInput);
}

TEST_CASE("quotients and sums over a shared divisor") {
  const DegreeBudget one_minus_q = DegreeBudget(1) - q;
  const DegreeBudget qint3 = (DegreeBudget(1) - pow(q, 3)) / one_minus_q;
  CHECK(same(qint3.numerator_bound(), {3, 0}));
  CHECK(same(qint3.denominator_degree(), {1, 0}));

  // Same divisor twice in a sum: common denominator keeps one copy.
  const auto sum = qint3 + a / one_minus_q;
  CHECK(same(sum.denominator_degree(), {1, 0}));
  CHECK(same(sum.numerator_bound(), {3, 1}));

  // Same divisor twice in a product: multiplicity 2.
  const auto prod = qint3 * qint3;
  CHECK(same(prod.denominator_degree(), {2, 0}));
  CHECK(same(prod.numerator_bound(), {6, 0}));

  // Different divisors of the same shape are treated as distinct.
  const auto other = (DegreeBudget(1) - pow(q, 2)) / (DegreeBudget(1) - q);
  CHECK(same((qint3 + other).denominator_degree(), {2, 0}));
  CHECK(same((qint3 + other).numerator_bound(), {4, 0}));
}

TEST_CASE("division by a fraction moves its denominator up") {
  const DegreeBudget frac = (q + a) / (DegreeBudget(1) - pow(q, 4));
  const DegreeBudget inv = DegreeBudget(1) / frac;
  CHECK(same(inv.numerator_bound(), {4, 0}));
  CHECK(same(inv.denominator_degree(), {1, 1}));
}

TEST_CASE("determinant bound") {
  const DegreeBudget x = q * q + a;
  const std::vector<std::vector<DegreeBudget>> m{{x, q}, {q, x}};
  CHECK(same(determinant(m).numerator_bound(), {4, 2}));
  CHECK(same(determinant(std::vector<std::vector<DegreeBudget>>{}).numerator_bound(), {0, 0}));
}

TEST_CASE("grid of the bounded size detects a maximal-degree nonzero polynomial") {
  for (int dq = 0; dq <= 4; ++dq)
    for (int da = 0; da <= 3; ++da) {
      const Degree bound = corner_product(q, a, dq, da).numerator_bound();
      CHECK(same(bound, {dq, da}));
      const auto grid = proof_grid(bound);
      CHECK(grid.size() == static_cast<std::size_t>((dq + 1) * (da + 1)));
      int nonzero = 0;
      for (const auto &pt : grid)
        nonzero += corner_product(pt.q, pt.a, dq, da).is_zero() ? 0 : 1;
      CHECK(nonzero == 1);
    }
}

TEST_CASE("identity degree bounds") {
  for (const auto &id : identity_ids()) {
    const int start = id == "hermite.recurrence" || id == "theorem.odd_constant_term" ? 1 : 0;
    Degree prev{};
    for (int n = start; n <= 5; ++n) {
      const Degree d = degree_bound(id, n);
      CHECK_MESSAGE(d.q >= prev.q, id << " n=" << n);
      CHECK_MESSAGE(d.a >= prev.a, id << " n=" << n);
      prev = d;
    }
  }
  const Degree c0 = degree_bound("conjecture.moments_equal_P", 0);
  CHECK(c0.q >= 0);
  const Degree c1 = degree_bound("conjecture.moments_equal_P", 1);
  CHECK(c1.q >= 1);
  CHECK(c1.a >= 1);
  CHECK(same(degree_bound("hankel.determinant", 0), {0, 0}));
  CHECK(degree_bound("lemmas.qvandermonde_limit", 4).a == 0);
  CHECK_THROWS_AS(degree_bound("no.such.identity", 1), InvalidInput);
  CHECK_THROWS_AS(degree_bound("hermite.recurrence", 0), InvalidInput);
}
