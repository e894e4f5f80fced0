#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "cigler/scalar.hpp"

namespace cigler {

/// Finite Laurent polynomial in t over F, stored sparsely by exponent.
/// Coefficients for which is_zero(F) holds are never stored.
template <class F> class BasicLaurent {
public:
  using Terms = std::map<int, F>;

  BasicLaurent() = default;
  BasicLaurent(std::initializer_list<std::pair<const int, F>> terms) {
    for (const auto &[e, c] : terms)
      add_term(e, c);
  }

  static BasicLaurent monomial(int exponent, const F &c) {
    BasicLaurent out;
    out.add_term(exponent, c);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  F coeff(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? F(0) : it->second;
  }

  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add_term(int exponent, const F &c) {
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted)
      it->second += c;
    if (detail::scalar_is_zero(it->second))
      terms_.erase(it);
  }

  BasicLaurent &operator+=(const BasicLaurent &rhs) {
    for (const auto &[e, c] : rhs.terms_)
      add_term(e, c);
    return *this;
  }
  BasicLaurent &operator-=(const BasicLaurent &rhs) {
    for (const auto &[e, c] : rhs.terms_)
      add_term(e, -c);
    return *this;
  }

  friend BasicLaurent operator+(BasicLaurent lhs, const BasicLaurent &rhs) { return lhs += rhs; }
  friend BasicLaurent operator-(BasicLaurent lhs, const BasicLaurent &rhs) { return lhs -= rhs; }

  friend BasicLaurent operator*(const BasicLaurent &lhs, const BasicLaurent &rhs) {
    BasicLaurent out;
    for (const auto &[e1, c1] : lhs.terms_)
      for (const auto &[e2, c2] : rhs.terms_)
        out.add_term(e1 + e2, c1 * c2);
    return out;
  }

  friend BasicLaurent operator*(const BasicLaurent &p, const F &c) {
    BasicLaurent out;
    for (const auto &[e, v] : p.terms_)
      out.add_term(e, v * c);
    return out;
  }
  friend BasicLaurent operator*(const F &c, const BasicLaurent &p) { return p * c; }

  /// Multiplies by t^shift.
  BasicLaurent shifted(int shift) const {
    BasicLaurent out;
    for (const auto &[e, c] : terms_)
      out.terms_.emplace(e + shift, c);
    return out;
  }

  /// Value at t = t0; t0 must be invertible when negative exponents occur.
  F eval(const F &t0) const {
    F acc(0);
    for (const auto &[e, c] : terms_)
      acc += c * pow(t0, e);
    return acc;
  }

  friend bool operator==(const BasicLaurent &lhs, const BasicLaurent &rhs) {
    return lhs.terms_ == rhs.terms_;
  }

private:
  Terms terms_;
};

} // namespace cigler
