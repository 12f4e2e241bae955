#include "wpgeom/jet.hpp"

#include <cmath>

#include "wpgeom/errors.hpp"

namespace wpgeom {

Jet::Jet(std::vector<Complex> base_point, int order)
    : base_(std::move(base_point)), order_(order) {
  if (order_ < 0) throw DimensionError("jet order must be nonnegative");
  if (vars() > MultiIndex::kMaxVars)
    throw DimensionError("too many variables for a jet");
}

Jet Jet::constant(const std::vector<Complex>& base_point, int order,
                  Complex value) {
  Jet j(base_point, order);
  j.set_coeff(MultiIndex(j.vars()), value);
  return j;
}

Jet Jet::variable(const std::vector<Complex>& base_point, int order, int i) {
  Jet j(base_point, order);
  if (i < 0 || i >= j.vars()) throw DimensionError("variable index out of range");
  j.set_coeff(MultiIndex(j.vars()), base_point[i]);
  if (order >= 1) j.set_coeff(MultiIndex::unit(j.vars(), i), Complex(1.0, 0.0));
  return j;
}

Complex Jet::coeff(const MultiIndex& beta) const {
  auto it = coeffs_.find(beta);
  return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

void Jet::set_coeff(const MultiIndex& beta, Complex value) {
  if (beta.vars() != vars())
    throw DimensionError("multi-index does not match jet dimension");
  if (beta.degree() > order_)
    throw DimensionError("multi-index degree exceeds jet order");
  if (value == Complex(0.0, 0.0))
    coeffs_.erase(beta);
  else
    coeffs_[beta] = value;
}

Jet Jet::truncated(int new_order) const {
  if (new_order > order_)
    throw DimensionError("cannot raise jet order by truncation");
  Jet r(base_, new_order);
  for (const auto& [beta, c] : coeffs_)
    if (beta.degree() <= new_order) r.coeffs_[beta] = c;
  return r;
}

Jet Jet::derivative(int i) const {
  if (order_ < 1) throw DimensionError("cannot differentiate an order-0 jet");
  if (i < 0 || i >= vars()) throw DimensionError("variable index out of range");
  Jet r(base_, order_ - 1);
  const MultiIndex ei = MultiIndex::unit(vars(), i);
  for (const auto& [beta, c] : coeffs_) {
    auto shifted = beta.minus(ei);
    if (!shifted) continue;
    // d/dw_i w^beta = beta_i w^{beta - e_i}
    r.coeffs_[*shifted] = c * static_cast<double>(beta[i]);
  }
  return r;
}

void Jet::check_compatible(const Jet& other) const {
  if (vars() != other.vars())
    throw DimensionError("jet dimension mismatch");
  if (order_ != other.order_)
    throw DimensionError("jet order mismatch");
  for (int i = 0; i < vars(); ++i)
    if (base_[i] != other.base_[i])
      throw DimensionError("jet base point mismatch");
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& [beta, c] : r.coeffs_) c = -c;
  return r;
}

Jet& Jet::operator+=(const Jet& other) {
  check_compatible(other);
  for (const auto& [beta, c] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(beta, c);
    if (!inserted) it->second += c;
  }
  return *this;
}

Jet& Jet::operator-=(const Jet& other) {
  check_compatible(other);
  for (const auto& [beta, c] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(beta, -c);
    if (!inserted) it->second -= c;
  }
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.check_compatible(b);
  Jet r(a.base_, a.order_);
  for (const auto& [ba, ca] : a.coeffs_) {
    for (const auto& [bb, cb] : b.coeffs_) {
      MultiIndex sum = ba.plus(bb);
      if (sum.degree() > a.order_) continue;
      r.coeffs_[sum] += ca * cb;
    }
  }
  return r;
}

Jet operator*(Complex s, Jet a) {
  for (auto& [beta, c] : a.coeffs_) c *= s;
  return a;
}

Jet operator+(Jet a, Complex s) {
  a.coeffs_[MultiIndex(a.vars())] += s;
  return a;
}

namespace {

// Splits a into c * (1 + x) with x the degree->=1 part over the unit c.
// Returns x; c is the constant term, validated nonzero by the caller.
Jet fractional_part(const Jet& a, Complex c) {
  Jet x = (1.0 / c) * a;
  x.set_coeff(MultiIndex(x.vars()), Complex(0.0, 0.0));
  return x;
}

}  // namespace

Jet reciprocal(const Jet& a) {
  const Complex c = a.value();
  if (c == Complex(0.0, 0.0))
    throw NumericalError("reciprocal of a jet with zero constant term");
  // 1/a = (1/c) sum_k (-x)^k with x nilpotent under truncation.
  const Jet x = fractional_part(a, c);
  Jet acc = Jet::constant(a.base_point(), a.order(), 1.0);
  Jet power = acc;
  for (int k = 1; k <= a.order(); ++k) {
    power = power * x;
    acc += (k % 2 ? -1.0 : 1.0) * power;
  }
  return (1.0 / c) * acc;
}

Jet log(const Jet& a) {
  const Complex c = a.value();
  if (c == Complex(0.0, 0.0))
    throw NumericalError("log of a jet with zero constant term");
  // log a = log c + sum_k (-1)^{k+1} x^k / k.
  const Jet x = fractional_part(a, c);
  Jet acc = Jet::constant(a.base_point(), a.order(), std::log(c));
  Jet power = Jet::constant(a.base_point(), a.order(), 1.0);
  for (int k = 1; k <= a.order(); ++k) {
    power = power * x;
    acc += ((k % 2 ? 1.0 : -1.0) / k) * power;
  }
  return acc;
}

}  // namespace wpgeom
