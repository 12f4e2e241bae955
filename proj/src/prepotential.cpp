#include "wpgeom/prepotential.hpp"

#include "wpgeom/errors.hpp"

namespace wpgeom {

void Prepotential::add_monomial(const MultiIndex& exps, Complex coefficient) {
  if (exps.vars() != n_)
    throw DimensionError("monomial multi-index does not match dimension");
  terms_[exps] += coefficient;
}

Complex Prepotential::eval(const std::vector<Complex>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw DimensionError("point dimension does not match prepotential");
  Complex acc(0.0, 0.0);
  for (const auto& [exps, c] : terms_) {
    Complex term = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < exps[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

Complex Prepotential::eval_derivative(int i,
                                      const std::vector<Complex>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw DimensionError("point dimension does not match prepotential");
  Complex acc(0.0, 0.0);
  for (const auto& [exps, c] : terms_) {
    if (exps[i] == 0) continue;
    Complex term = c * static_cast<double>(exps[i]);
    for (int j = 0; j < n_; ++j) {
      const int e = (j == i) ? exps[j] - 1 : exps[j];
      for (int k = 0; k < e; ++k) term *= point[j];
    }
    acc += term;
  }
  return acc;
}

int Prepotential::degree() const {
  int d = 0;
  for (const auto& [exps, c] : terms_) d = std::max(d, exps.degree());
  return d;
}

Jet jet_from_polynomial(const Prepotential& p,
                        const std::vector<Complex>& point, int order) {
  if (static_cast<int>(point.size()) != p.dimension())
    throw DimensionError("point dimension does not match prepotential");
  if (order < 0) throw DimensionError("jet order must be nonnegative");

  const int n = p.dimension();
  Jet jet(point, order);
  // c z^gamma = c prod_i (p_i + w_i)^{gamma_i}; expand each factor
  // binomially and collect the terms with |beta| <= order.
  for (const auto& [gamma, c] : p.monomials()) {
    std::vector<MultiIndex> partial = {MultiIndex(n)};
    std::vector<Complex> weight = {c};
    for (int i = 0; i < n; ++i) {
      std::vector<MultiIndex> next_partial;
      std::vector<Complex> next_weight;
      for (std::size_t t = 0; t < partial.size(); ++t) {
        for (int b = 0; b <= gamma[i]; ++b) {
          MultiIndex beta = partial[t];
          beta.set(i, b);
          if (beta.degree() > order) continue;
          Complex w = weight[t] * binomial(gamma[i], b);
          for (int k = 0; k < gamma[i] - b; ++k) w *= point[i];
          next_partial.push_back(beta);
          next_weight.push_back(w);
        }
      }
      partial.swap(next_partial);
      weight.swap(next_weight);
    }
    for (std::size_t t = 0; t < partial.size(); ++t)
      jet.set_coeff(partial[t], jet.coeff(partial[t]) + weight[t]);
  }
  return jet;
}

}  // namespace wpgeom
