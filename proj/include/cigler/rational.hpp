#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cigler {

/**
 * Exact rational number in canonical form.
 *
 * The denominator is always positive and coprime to the numerator, so two
 * Rationals compare equal exactly when they have identical numerator and
 * denominator. Division by zero throws InvalidInput.
 */
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
  Rational(const mpz_class &numerator, const mpz_class &denominator);
  explicit Rational(const mpq_class &value);

  /// Parses "p" or "p/r" with decimal digits and an optional leading minus.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class &raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p" when the denominator is 1, otherwise "p/r".
  std::string to_string() const;

  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational &x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational &lhs, const Rational &rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_;
};

/// Integer power; negative exponents invert the base (which must be nonzero).
Rational pow(const Rational &base, long exponent);

inline bool is_zero(const Rational &x) { return x.is_zero(); }

std::ostream &operator<<(std::ostream &os, const Rational &x);

} // namespace cigler
