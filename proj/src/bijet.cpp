#include "wpgeom/bijet.hpp"

#include <cmath>

#include "wpgeom/errors.hpp"

namespace wpgeom {

BiJet::BiJet(std::vector<Complex> base_point, BiShape shape)
    : base_(std::move(base_point)), shape_(shape) {
  if (shape.total < 0 || shape.hol < 0 || shape.anti < 0)
    throw DimensionError("bijet shape must be nonnegative");
  if (vars() > MultiIndex::kMaxVars)
    throw DimensionError("too many variables for a bijet");
}

BiJet BiJet::constant(const std::vector<Complex>& base_point, BiShape shape,
                      Complex value) {
  BiJet b(base_point, shape);
  b.set_coeff(MultiIndex(b.vars()), MultiIndex(b.vars()), value);
  return b;
}

BiJet BiJet::from_holomorphic(const Jet& jet, BiShape shape) {
  BiJet b(jet.base_point(), shape);
  const MultiIndex zero(jet.vars());
  for (const auto& [beta, c] : jet.coeffs())
    if (shape.admits(beta.degree(), 0)) b.coeffs_[{beta, zero}] = c;
  return b;
}

Complex BiJet::coeff(const MultiIndex& hol, const MultiIndex& anti) const {
  auto it = coeffs_.find({hol, anti});
  return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

void BiJet::set_coeff(const MultiIndex& hol, const MultiIndex& anti,
                      Complex value) {
  if (hol.vars() != vars() || anti.vars() != vars())
    throw DimensionError("multi-index does not match bijet dimension");
  if (!shape_.admits(hol.degree(), anti.degree()))
    throw DimensionError("multi-index outside bijet shape");
  if (value == Complex(0.0, 0.0))
    coeffs_.erase({hol, anti});
  else
    coeffs_[{hol, anti}] = value;
}

BiJet BiJet::conjugate() const {
  BiJet r(base_, BiShape{shape_.total, shape_.anti, shape_.hol});
  for (const auto& [key, c] : coeffs_)
    r.coeffs_[{key.second, key.first}] = std::conj(c);
  return r;
}

BiJet BiJet::d(int i) const {
  if (shape_.hol < 1 || shape_.total < 1)
    throw DimensionError("bijet holomorphic order exhausted");
  BiJet r(base_, shape_.d());
  const MultiIndex ei = MultiIndex::unit(vars(), i);
  for (const auto& [key, c] : coeffs_) {
    auto shifted = key.first.minus(ei);
    if (!shifted) continue;
    r.coeffs_[{*shifted, key.second}] = c * static_cast<double>(key.first[i]);
  }
  return r;
}

BiJet BiJet::dbar(int i) const {
  if (shape_.anti < 1 || shape_.total < 1)
    throw DimensionError("bijet anti-holomorphic order exhausted");
  BiJet r(base_, shape_.dbar());
  const MultiIndex ei = MultiIndex::unit(vars(), i);
  for (const auto& [key, c] : coeffs_) {
    auto shifted = key.second.minus(ei);
    if (!shifted) continue;
    r.coeffs_[{key.first, *shifted}] = c * static_cast<double>(key.second[i]);
  }
  return r;
}

BiJet BiJet::truncated(BiShape shape) const {
  BiJet r(base_, shape);
  for (const auto& [key, c] : coeffs_)
    if (shape.admits(key.first.degree(), key.second.degree()))
      r.coeffs_[key] = c;
  return r;
}

double BiJet::hermitian_defect() const {
  double worst = 0.0;
  for (const auto& [key, c] : coeffs_) {
    auto it = coeffs_.find({key.second, key.first});
    const Complex mirror =
        it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
    worst = std::max(worst, std::abs(c - std::conj(mirror)));
  }
  return worst;
}

void BiJet::check_compatible(const BiJet& other) const {
  if (vars() != other.vars()) throw DimensionError("bijet dimension mismatch");
  for (int i = 0; i < vars(); ++i)
    if (base_[i] != other.base_[i])
      throw DimensionError("bijet base point mismatch");
}

BiJet BiJet::operator-() const {
  BiJet r = *this;
  for (auto& [key, c] : r.coeffs_) c = -c;
  return r;
}

BiJet& BiJet::operator+=(const BiJet& other) {
  check_compatible(other);
  const BiShape s = shape_.intersect(other.shape_);
  if (!(s == shape_)) *this = truncated(s);
  for (const auto& [key, c] : other.coeffs_) {
    if (!s.admits(key.first.degree(), key.second.degree())) continue;
    auto [it, inserted] = coeffs_.try_emplace(key, c);
    if (!inserted) it->second += c;
  }
  return *this;
}

BiJet& BiJet::operator-=(const BiJet& other) {
  check_compatible(other);
  const BiShape s = shape_.intersect(other.shape_);
  if (!(s == shape_)) *this = truncated(s);
  for (const auto& [key, c] : other.coeffs_) {
    if (!s.admits(key.first.degree(), key.second.degree())) continue;
    auto [it, inserted] = coeffs_.try_emplace(key, -c);
    if (!inserted) it->second -= c;
  }
  return *this;
}

BiJet operator*(const BiJet& a, const BiJet& b) {
  a.check_compatible(b);
  const BiShape s = a.shape_.intersect(b.shape_);
  BiJet r(a.base_, s);
  for (const auto& [ka, ca] : a.coeffs_) {
    const int ha = ka.first.degree();
    const int aa = ka.second.degree();
    if (!s.admits(ha, aa)) continue;
    for (const auto& [kb, cb] : b.coeffs_) {
      const int h = ha + kb.first.degree();
      const int an = aa + kb.second.degree();
      if (!s.admits(h, an)) continue;
      r.coeffs_[{ka.first.plus(kb.first), ka.second.plus(kb.second)}] +=
          ca * cb;
    }
  }
  return r;
}

BiJet operator*(Complex s, BiJet a) {
  for (auto& [key, c] : a.coeffs_) c *= s;
  return a;
}

BiJet operator+(BiJet a, Complex s) {
  a.coeffs_[{MultiIndex(a.vars()), MultiIndex(a.vars())}] += s;
  return a;
}

namespace {

BiJet fractional_part(const BiJet& a, Complex c) {
  BiJet x = (1.0 / c) * a;
  x.set_coeff(MultiIndex(x.vars()), MultiIndex(x.vars()), Complex(0.0, 0.0));
  return x;
}

}  // namespace

BiJet reciprocal(const BiJet& a) {
  const Complex c = a.value();
  if (c == Complex(0.0, 0.0))
    throw NumericalError("reciprocal of a bijet with zero constant term");
  const BiJet x = fractional_part(a, c);
  BiJet acc = BiJet::constant(a.base_point(), a.shape(), 1.0);
  BiJet power = acc;
  const int nilpotency = std::min(a.shape().total, a.shape().hol + a.shape().anti);
  for (int k = 1; k <= nilpotency; ++k) {
    power = power * x;
    acc += (k % 2 ? -1.0 : 1.0) * power;
  }
  return (1.0 / c) * acc;
}

BiJet log(const BiJet& a) {
  const Complex c = a.value();
  if (c == Complex(0.0, 0.0))
    throw NumericalError("log of a bijet with zero constant term");
  const BiJet x = fractional_part(a, c);
  BiJet acc = BiJet::constant(a.base_point(), a.shape(), std::log(c));
  BiJet power = BiJet::constant(a.base_point(), a.shape(), 1.0);
  const int nilpotency = std::min(a.shape().total, a.shape().hol + a.shape().anti);
  for (int k = 1; k <= nilpotency; ++k) {
    power = power * x;
    acc += ((k % 2 ? 1.0 : -1.0) / k) * power;
  }
  return acc;
}

}  // namespace wpgeom
