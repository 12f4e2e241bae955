#include "wpgeom/finite_diff.hpp"

#include <cmath>

#include "wpgeom/errors.hpp"

namespace wpgeom {

namespace {

// d^beta f(p) estimated by the tensor product of k-th central differences,
// delta^k f / h^k with delta f(x) = f(x + h/2) - f(x - h/2). The stencil for
// one variable with exponent k has offsets (k/2 - j) h and weights
// (-1)^j C(k,j), j = 0..k. Accuracy O(h^2).
Complex central_stencil(
    const std::function<Complex(const std::vector<Complex>&)>& evaluator,
    const std::vector<Complex>& point, const MultiIndex& beta, double h) {
  const int n = beta.vars();
  std::vector<std::vector<double>> offsets(n);
  std::vector<std::vector<double>> weights(n);
  for (int i = 0; i < n; ++i) {
    const int k = beta[i];
    for (int j = 0; j <= k; ++j) {
      offsets[i].push_back((0.5 * k - j) * h);
      weights[i].push_back((j % 2 ? -1.0 : 1.0) * binomial(k, j));
    }
  }

  Complex acc(0.0, 0.0);
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Complex> x = point;
    double w = 1.0;
    for (int i = 0; i < n; ++i) {
      x[i] += offsets[i][idx[i]];
      w *= weights[i][idx[i]];
    }
    acc += w * evaluator(x);

    int i = 0;
    while (i < n && ++idx[i] == offsets[i].size()) idx[i++] = 0;
    if (i == n) break;
  }
  return acc / std::pow(h, beta.degree());
}

}  // namespace

Jet finite_difference_jet(
    const std::function<Complex(const std::vector<Complex>&)>& evaluator,
    const std::vector<Complex>& point, int order, double step,
    std::string* warning) {
  if (order < 0) throw DimensionError("jet order must be nonnegative");
  if (step <= 0.0) throw NumericalError("finite-difference step must be positive");
  if (step < 1e-5 && warning)
    *warning = "finite-difference step below 1e-5: expect cancellation";

  Jet jet(point, order);
  for (const auto& beta : MultiIndex::all_up_to(point.size(), order)) {
    Complex deriv;
    if (beta.degree() == 0) {
      deriv = evaluator(point);
    } else {
      // One Richardson level: error h^2 -> h^4.
      const Complex coarse = central_stencil(evaluator, point, beta, step);
      const Complex fine = central_stencil(evaluator, point, beta, step / 2);
      deriv = (4.0 * fine - coarse) / 3.0;
    }
    jet.set_coeff(beta, deriv / beta.factorial());
  }
  return jet;
}

}  // namespace wpgeom
