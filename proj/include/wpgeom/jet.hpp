#pragma once

#include <complex>
#include <map>
#include <vector>

#include "wpgeom/multiindex.hpp"

namespace wpgeom {

using Complex = std::complex<double>;

/// Truncated multivariate holomorphic power series at a base point.
///
/// A Jet of order M stores Taylor coefficients c_beta for all multi-indices
/// with |beta| <= M, so that the represented function is
///
///   f(p + w) = sum_beta c_beta w^beta + O(w^{M+1}).
///
/// Coefficients are c_beta = (1/beta!) d^beta f(p). Arithmetic is exact
/// truncation: the product of two jets agrees with the Cauchy product
/// restricted to total degree <= M. Jets are immutable values once built;
/// all operations return new jets.
class Jet {
 public:
  Jet() : order_(0) {}

  Jet(std::vector<Complex> base_point, int order);

  static Jet constant(const std::vector<Complex>& base_point, int order,
                      Complex value);

  /// The coordinate function z_i as a jet: constant term p_i, linear term w_i.
  static Jet variable(const std::vector<Complex>& base_point, int order, int i);

  int vars() const { return static_cast<int>(base_.size()); }
  int order() const { return order_; }
  const std::vector<Complex>& base_point() const { return base_; }

  /// Taylor coefficient at beta (zero if absent). beta must have vars() parts.
  Complex coeff(const MultiIndex& beta) const;

  /// Sets a coefficient. Throws DimensionError if |beta| exceeds the order.
  void set_coeff(const MultiIndex& beta, Complex value);

  /// Value of the function at the base point (the constant coefficient).
  Complex value() const { return coeff(MultiIndex(vars())); }

  /// d^beta f at the base point, i.e. beta! * coeff(beta).
  Complex derivative_value(const MultiIndex& beta) const {
    return beta.factorial() * coeff(beta);
  }

  /// Drops all coefficients of degree > new_order.
  Jet truncated(int new_order) const;

  /// Partial derivative with respect to variable i; order drops by one.
  Jet derivative(int i) const;

  const std::map<MultiIndex, Complex>& coeffs() const { return coeffs_; }

  Jet operator-() const;
  Jet& operator+=(const Jet& other);
  Jet& operator-=(const Jet& other);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(Complex s, Jet a);
  friend Jet operator*(Jet a, Complex s) { return s * a; }
  friend Jet operator+(Jet a, Complex s);
  friend Jet operator+(Complex s, Jet a) { return a + s; }
  friend Jet operator-(Jet a, Complex s) { return a + (-s); }
  friend Jet operator-(Complex s, const Jet& a) { return -a + s; }

 private:
  void check_compatible(const Jet& other) const;

  std::vector<Complex> base_;
  int order_;
  std::map<MultiIndex, Complex> coeffs_;
};

/// Formal inverse 1/a. Requires a nonzero constant term.
Jet reciprocal(const Jet& a);

/// Formal logarithm (principal branch at the constant term). Requires a
/// nonzero constant term.
Jet log(const Jet& a);

}  // namespace wpgeom
