#include "cigler/rational.hpp"

#include <ostream>

#include "cigler/error.hpp"

namespace cigler {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-')
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (c < '0' || c > '9')
      return false;
  return true;
}

} // namespace

Rational::Rational(const mpz_class &numerator, const mpz_class &denominator) {
  if (denominator == 0)
    throw InvalidInput("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class &value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-')
    throw InvalidInput("malformed rational '" + std::string(text) + "' (expected p or p/r)");
  return Rational(mpz_class(std::string(num)), mpz_class(std::string(den)));
}

std::string Rational::to_string() const {
  if (is_integer())
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational &Rational::operator+=(const Rational &rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero())
    throw InvalidInput("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational pow(const Rational &base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero())
      throw InvalidInput("zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::ostream &operator<<(std::ostream &os, const Rational &x) { return os << x.to_string(); }

} // namespace cigler
