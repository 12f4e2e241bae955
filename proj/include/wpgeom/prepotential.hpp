#pragma once

#include <map>
#include <vector>

#include "wpgeom/jet.hpp"
#include "wpgeom/multiindex.hpp"

namespace wpgeom {

/// Sparse polynomial in n complex variables: the sole input datum of the
/// whole pipeline. Stored as monomial -> coefficient.
class Prepotential {
 public:
  explicit Prepotential(int dimension) : n_(dimension) {}

  int dimension() const { return n_; }

  void add_monomial(const MultiIndex& exps, Complex coefficient);

  const std::map<MultiIndex, Complex>& monomials() const { return terms_; }

  /// Plain evaluation at a point (independent of any jet arithmetic).
  Complex eval(const std::vector<Complex>& point) const;

  /// Analytic first partial d/dz_i, evaluated at a point.
  Complex eval_derivative(int i, const std::vector<Complex>& point) const;

  /// Maximum total degree over the stored monomials.
  int degree() const;

 private:
  int n_;
  std::map<MultiIndex, Complex> terms_;
};

/// Taylor re-expansion of a polynomial at a point: the returned jet's
/// coefficient at beta equals (1/beta!) d^beta p(point). Exact (binomial
/// expansion), for any requested order.
Jet jet_from_polynomial(const Prepotential& p,
                        const std::vector<Complex>& point, int order);

}  // namespace wpgeom
