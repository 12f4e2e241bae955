#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "wpgeom/catalog.hpp"
#include "wpgeom/jet.hpp"
#include "wpgeom/prepotential.hpp"
#include "wpgeom/rng.hpp"

namespace wpgeom::testing {

/// Largest coefficient difference between two jets (union of keys).
inline double jet_distance(const Jet& a, const Jet& b) {
  double worst = 0.0;
  for (const auto& [k, c] : a.coeffs())
    worst = std::max(worst, std::abs(c - b.coeff(k)));
  for (const auto& [k, c] : b.coeffs())
    worst = std::max(worst, std::abs(c - a.coeff(k)));
  return worst;
}

/// Random point in the complex ball of the given radius.
inline std::vector<Complex> random_point(GaussianRng& rng, int n,
                                         double radius) {
  std::vector<Complex> z(n);
  double norm2 = 0.0;
  for (int a = 0; a < n; ++a) {
    z[a] = Complex(rng.gauss(), rng.gauss());
    norm2 += std::norm(z[a]);
  }
  const double scale =
      radius * std::pow(rng.uniform(), 1.0 / (2.0 * n)) / std::sqrt(norm2);
  for (auto& c : z) c *= scale;
  return z;
}

/// The polynomial as a plain evaluator (no jet arithmetic involved).
inline std::function<Complex(const std::vector<Complex>&)> evaluator_of(
    const Prepotential& p) {
  return [&p](const std::vector<Complex>& z) { return p.eval(z); };
}

// ---------------------------------------------------------------------------
// Independent oracle for the metric pipeline.
//
// The pairing -Q(Omega(z), conj(Omega(w))) is holomorphic in z and
// anti-holomorphic in w and restricts to e^{-K} on the diagonal w = z.
// Everything below evaluates it by direct polynomial evaluation (values of u
// and its analytic first partials only) and differentiates by real-step
// central differences in the two slots separately. No jets, no truncated
// series: an independent route to K, h, and the Christoffels.
// ---------------------------------------------------------------------------

class PolarizedOracle {
 public:
  PolarizedOracle(const Prepotential& u, double step = 0.02)
      : u_(u), n_(u.dimension()), step_(step) {}

  /// Omega(z) by direct evaluation.
  std::vector<Complex> omega(const std::vector<Complex>& z) const {
    std::vector<Complex> w(2 * n_ + 2);
    const double s = 1.0 / std::sqrt(2.0);
    w[0] = Complex(1.0, 0.0);
    Complex middle = u_.eval(z);
    for (int a = 0; a < n_; ++a) {
      const Complex ua = u_.eval_derivative(a, z);
      w[1 + a] = s * z[a];
      middle -= 0.5 * z[a] * ua;
      w[n_ + 2 + a] = s * ua;
    }
    w[n_ + 1] = middle;
    return w;
  }

  /// -Q(Omega(z), conj(Omega(w))).
  Complex pairing(const std::vector<Complex>& z,
                  const std::vector<Complex>& w) const {
    const std::vector<Complex> a = omega(z);
    std::vector<Complex> b = omega(w);
    for (auto& c : b) c = std::conj(c);
    Complex acc(0.0, 0.0);
    for (int k = 0; k <= n_; ++k)
      acc += a[k] * b[n_ + 1 + k] - a[n_ + 1 + k] * b[k];
    return -Complex(0.0, 1.0) * acc;
  }

  Complex k_polarized(const std::vector<Complex>& z,
                      const std::vector<Complex>& w) const {
    return -std::log(pairing(z, w));
  }

  double k_at(const std::vector<Complex>& z) const {
    return k_polarized(z, z).real();
  }

  /// d_i K via a central difference in the holomorphic slot.
  Complex dk(const std::vector<Complex>& z, int i) const {
    auto f = [&](double t) {
      std::vector<Complex> zi = z;
      zi[i] += t;
      return k_polarized(zi, z);
    };
    return richardson(f);
  }

  /// h_{i jbar} = d_i dbar_j K via nested central differences.
  Complex h(const std::vector<Complex>& z, int i, int j) const {
    auto f = [&](double t) {
      std::vector<Complex> zi = z;
      zi[i] += t;
      auto g = [&](double s2) {
        std::vector<Complex> wj = z;
        wj[j] += s2;
        return k_polarized(zi, wj);
      };
      return richardson(g);
    };
    return richardson(f);
  }

  /// d_l h_{i jbar} (third derivative, two holomorphic slots).
  Complex dh(const std::vector<Complex>& z, int l, int i, int j) const {
    auto f = [&](double t) {
      std::vector<Complex> zl = z;
      zl[l] += t;
      auto g = [&](double t2) {
        std::vector<Complex> zli = zl;
        zli[i] += t2;
        auto k = [&](double s2) {
          std::vector<Complex> wj = z;
          wj[j] += s2;
          return k_polarized(zli, wj);
        };
        return richardson(k);
      };
      return richardson(g);
    };
    return richardson(f);
  }

 private:
  Complex richardson(const std::function<Complex(double)>& f) const {
    auto central = [&](double h) { return (f(h) - f(-h)) / (2.0 * h); };
    return (4.0 * central(step_ / 2) - central(step_)) / 3.0;
  }

  const Prepotential& u_;
  int n_;
  double step_;
};

}  // namespace wpgeom::testing
