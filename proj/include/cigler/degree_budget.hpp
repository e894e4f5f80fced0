#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace cigler {

/// Pair of degrees in (q, a).
struct Degree {
  long q = 0;
  long a = 0;

  friend Degree operator+(Degree x, Degree y) { return {x.q + y.q, x.a + y.a}; }
  friend Degree operator-(Degree x, Degree y) { return {x.q - y.q, x.a - y.a}; }
  friend Degree operator*(Degree x, long k) { return {x.q * k, x.a * k}; }
  friend bool operator==(Degree, Degree) = default;
};

Degree max(Degree x, Degree y);

/**
 * Scalar that stands for a rational function N(q, a) / D(q, a) and records
 * only an upper bound on the degrees of N together with a factored D.
 *
 * D is kept as q^i a^j times a product of divisor atoms. Each atom is the
 * numerator of some earlier value that was divided by; atoms are keyed by
 * the identity of that value, so dividing twice by the same variable raises
 * a multiplicity while a sum takes the maximum multiplicity (a common
 * multiple of both denominators). The bounds are formal: they hold for the
 * unreduced numerator produced by the same sequence of operations that the
 * exact Rational evaluation performs.
 *
 * Running an identity over DegreeBudget therefore bounds the numerator of
 * lhs - rhs. If that numerator vanishes on a (Dq+1) x (Da+1) tensor grid of
 * points where every divisor is nonzero, it is the zero polynomial.
 */
class DegreeBudget {
public:
  DegreeBudget(long constant = 0); // NOLINT(google-explicit-constructor)

  static DegreeBudget variable_q();
  static DegreeBudget variable_a();

  /// Bound on the degrees of the numerator.
  Degree numerator_bound() const { return num_; }
  Degree denominator_degree() const;
  bool structurally_zero() const { return zero_; }

  DegreeBudget &operator+=(const DegreeBudget &rhs);
  DegreeBudget &operator-=(const DegreeBudget &rhs) { return *this += rhs; }
  DegreeBudget &operator*=(const DegreeBudget &rhs);
  DegreeBudget &operator/=(const DegreeBudget &rhs);

  friend DegreeBudget operator+(DegreeBudget x, const DegreeBudget &y) { return x += y; }
  friend DegreeBudget operator-(DegreeBudget x, const DegreeBudget &y) { return x -= y; }
  friend DegreeBudget operator*(DegreeBudget x, const DegreeBudget &y) { return x *= y; }
  friend DegreeBudget operator/(DegreeBudget x, const DegreeBudget &y) { return x /= y; }
  friend DegreeBudget operator-(const DegreeBudget &x) { return x; }

  friend DegreeBudget pow(const DegreeBudget &base, long exponent);

private:
  struct Atom {
    Degree degree;
    long multiplicity = 0;
  };

  static DegreeBudget monomial(Degree exponents);
  void multiply_monomial(Degree exponents);
  void refresh_id();

  Degree num_;
  Degree mono_;
  std::map<std::uint64_t, Atom> atoms_;
  std::optional<Degree> monomial_;
  bool zero_ = false;
  std::uint64_t id_ = 0;
};

inline bool is_zero(const DegreeBudget &x) { return x.structurally_zero(); }

/// Leibniz-style bound: every entry is written over the common denominator
/// of all entries, and the determinant is a sum of (n+1)-fold products.
DegreeBudget determinant(const std::vector<std::vector<DegreeBudget>> &matrix);

} // namespace cigler
