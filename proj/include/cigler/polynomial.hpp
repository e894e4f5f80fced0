#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cigler/scalar.hpp"

namespace cigler {

/**
 * Dense univariate polynomial in x over a scalar field F.
 *
 * Coefficients are stored by ascending degree. Trailing coefficients for
 * which is_zero(F) holds are trimmed, so the zero polynomial has no
 * coefficients and degree() == -1.
 *
 * F needs the usual field operators, construction from long, and an
 * ADL-visible is_zero(const F&).
 */
template <class F> class BasicPolynomial {
public:
  BasicPolynomial() = default;
  BasicPolynomial(std::initializer_list<F> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit BasicPolynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static BasicPolynomial constant(const F &c) { return BasicPolynomial({c}); }
  static BasicPolynomial x() { return BasicPolynomial({F(0), F(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^i; zero outside the stored range.
  F coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
      return F(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const std::vector<F> &coefficients() const { return coeffs_; }
  F leading() const { return coeffs_.empty() ? F(0) : coeffs_.back(); }

  BasicPolynomial &operator+=(const BasicPolynomial &rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
      coeffs_.resize(rhs.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
      coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
  }

  BasicPolynomial &operator-=(const BasicPolynomial &rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
      coeffs_.resize(rhs.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
      coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
  }

  BasicPolynomial &operator*=(const F &c) {
    for (auto &v : coeffs_)
      v *= c;
    normalize();
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial lhs, const BasicPolynomial &rhs) {
    return lhs += rhs;
  }
  friend BasicPolynomial operator-(BasicPolynomial lhs, const BasicPolynomial &rhs) {
    return lhs -= rhs;
  }
  friend BasicPolynomial operator-(BasicPolynomial p) {
    for (auto &v : p.coeffs_)
      v = -v;
    return p;
  }
  friend BasicPolynomial operator*(BasicPolynomial p, const F &c) { return p *= c; }
  friend BasicPolynomial operator*(const F &c, BasicPolynomial p) { return p *= c; }

  friend BasicPolynomial operator*(const BasicPolynomial &lhs, const BasicPolynomial &rhs) {
    if (lhs.is_zero() || rhs.is_zero())
      return {};
    std::vector<F> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return BasicPolynomial(std::move(out));
  }

  /// Multiplies by x.
  BasicPolynomial shift_mul_x() const {
    if (is_zero())
      return {};
    std::vector<F> out;
    out.reserve(coeffs_.size() + 1);
    out.push_back(F(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return BasicPolynomial(std::move(out));
  }

  /// Horner evaluation.
  F eval(const F &x0) const {
    F acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x0 + *it;
    return acc;
  }

  friend bool operator==(const BasicPolynomial &lhs, const BasicPolynomial &rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

private:
  void normalize() {
    while (!coeffs_.empty() && detail::scalar_is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

} // namespace cigler
