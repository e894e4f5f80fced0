#include "cigler/degree_budget.hpp"

#include <algorithm>
#include <atomic>

#include "cigler/error.hpp"

namespace cigler {

namespace {

std::uint64_t next_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

} // namespace

Degree max(Degree x, Degree y) { return {std::max(x.q, y.q), std::max(x.a, y.a)}; }

DegreeBudget::DegreeBudget(long constant) : id_(next_id()) {
  zero_ = constant == 0;
  if (!zero_)
    monomial_ = Degree{};
}

DegreeBudget DegreeBudget::monomial(Degree exponents) {
  DegreeBudget out(1);
  out.multiply_monomial(exponents);
  return out;
}

DegreeBudget DegreeBudget::variable_q() { return monomial({1, 0}); }
DegreeBudget DegreeBudget::variable_a() { return monomial({0, 1}); }

Degree DegreeBudget::denominator_degree() const {
  Degree d = mono_;
  for (const auto &[key, atom] : atoms_)
    d = d + atom.degree * atom.multiplicity;
  return d;
}

void DegreeBudget::refresh_id() { id_ = next_id(); }

void DegreeBudget::multiply_monomial(Degree e) {
  if (zero_)
    return;
  if (monomial_) {
    const Degree total = *monomial_ + e;
    num_ = {std::max(total.q, 0L), std::max(total.a, 0L)};
    mono_ = {std::max(-total.q, 0L), std::max(-total.a, 0L)};
    monomial_ = total;
  } else {
    (e.q >= 0 ? num_.q : mono_.q) += std::abs(e.q);
    (e.a >= 0 ? num_.a : mono_.a) += std::abs(e.a);
  }
  refresh_id();
}

DegreeBudget &DegreeBudget::operator+=(const DegreeBudget &rhs) {
  if (rhs.zero_)
    return *this;
  if (zero_)
    return *this = rhs;
  if (monomial_ && rhs.monomial_ && *monomial_ == *rhs.monomial_) {
    refresh_id();
    return *this;
  }
  const Degree own_den = denominator_degree();
  const Degree rhs_den = rhs.denominator_degree();
  mono_ = max(mono_, rhs.mono_);
  for (const auto &[key, atom] : rhs.atoms_) {
    auto &mine = atoms_[key];
    mine.degree = atom.degree;
    mine.multiplicity = std::max(mine.multiplicity, atom.multiplicity);
  }
  const Degree common = denominator_degree();
  num_ = max(num_ + (common - own_den), rhs.num_ + (common - rhs_den));
  monomial_.reset();
  refresh_id();
  return *this;
}

DegreeBudget &DegreeBudget::operator*=(const DegreeBudget &rhs) {
  if (zero_ || rhs.zero_)
    return *this = DegreeBudget(0);
  if (rhs.monomial_) {
    multiply_monomial(*rhs.monomial_);
    return *this;
  }
  if (monomial_) {
    const Degree e = *monomial_;
    *this = rhs;
    multiply_monomial(e);
    return *this;
  }
  num_ = num_ + rhs.num_;
  mono_ = mono_ + rhs.mono_;
  for (const auto &[key, atom] : rhs.atoms_) {
    auto &mine = atoms_[key];
    mine.degree = atom.degree;
    mine.multiplicity += atom.multiplicity;
  }
  refresh_id();
  return *this;
}

DegreeBudget &DegreeBudget::operator/=(const DegreeBudget &rhs) {
  if (rhs.zero_)
    throw InvalidInput("degree budget: division by a structural zero");
  if (zero_)
    return *this;
  if (rhs.monomial_) {
    multiply_monomial(Degree{} - *rhs.monomial_);
    return *this;
  }
  // x / (N / D) = x * D / N
  num_ = num_ + rhs.denominator_degree();
  auto &atom = atoms_[rhs.id_];
  atom.degree = rhs.num_;
  atom.multiplicity += 1;
  monomial_.reset();
  refresh_id();
  return *this;
}

DegreeBudget pow(const DegreeBudget &base, long exponent) {
  if (base.zero_) {
    if (exponent < 0)
      throw InvalidInput("degree budget: zero raised to a negative power");
    return exponent == 0 ? DegreeBudget(1) : DegreeBudget(0);
  }
  if (base.monomial_)
    return DegreeBudget::monomial(*base.monomial_ * exponent);
  if (exponent < 0)
    return DegreeBudget(1) / pow(base, -exponent);
  if (exponent == 0)
    return DegreeBudget(1);
  DegreeBudget out = base;
  out.num_ = base.num_ * exponent;
  out.mono_ = base.mono_ * exponent;
  for (auto &[key, atom] : out.atoms_)
    atom.multiplicity *= exponent;
  out.refresh_id();
  return out;
}

DegreeBudget determinant(const std::vector<std::vector<DegreeBudget>> &matrix) {
  if (matrix.empty())
    return DegreeBudget(1);
  // Every Leibniz term takes one entry per row, so the product of row sums covers it.
  DegreeBudget out(1);
  for (const auto &row : matrix) {
    DegreeBudget row_sum(0);
    for (const auto &entry : row)
      row_sum += entry;
    out *= row_sum;
  }
  return out;
}

} // namespace cigler
