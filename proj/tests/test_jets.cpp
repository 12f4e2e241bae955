#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "wpgeom/catalog.hpp"
#include "wpgeom/errors.hpp"
#include "wpgeom/finite_diff.hpp"
#include "wpgeom/jet.hpp"
#include "wpgeom/prepotential.hpp"
#include "test_helpers.hpp"

using namespace wpgeom;
using wpgeom::testing::jet_distance;
using wpgeom::testing::random_point;

namespace {
const Complex kI(0.0, 1.0);
const std::vector<Complex> kOrigin1{Complex(0.0, 0.0)};
}  // namespace

TEST_CASE("jet_from_polynomial re-expands monomials") {
  SECTION("z^2 at the origin") {
    Prepotential p(1);
    p.add_monomial(MultiIndex{2}, 1.0);
    const Jet j = jet_from_polynomial(p, kOrigin1, 3);
    CHECK(j.coeff(MultiIndex{2}) == Complex(1.0, 0.0));
    CHECK(j.coeff(MultiIndex{0}) == Complex(0.0, 0.0));
    CHECK(j.coeff(MultiIndex{1}) == Complex(0.0, 0.0));
    CHECK(j.coeff(MultiIndex{3}) == Complex(0.0, 0.0));
  }

  SECTION("normal-form quadratic at the origin, n = 2") {
    const CatalogEntry e = make_quadratic(2);
    const Jet j = jet_from_polynomial(e.u, {Complex(0, 0), Complex(0, 0)}, 2);
    CHECK(j.coeff(MultiIndex{0, 0}) == -kI);
    CHECK(j.coeff(MultiIndex{2, 0}) == 0.5 * kI);
    CHECK(j.coeff(MultiIndex{0, 2}) == 0.5 * kI);
    CHECK(j.coeff(MultiIndex{1, 1}) == Complex(0.0, 0.0));
  }

  SECTION("z^3 re-expanded at 1 gives binomial coefficients") {
    Prepotential p(1);
    p.add_monomial(MultiIndex{3}, 1.0);
    const Jet j = jet_from_polynomial(p, {Complex(1.0, 0.0)}, 3);
    CHECK(j.coeff(MultiIndex{0}) == Complex(1.0, 0.0));
    CHECK(j.coeff(MultiIndex{1}) == Complex(3.0, 0.0));
    CHECK(j.coeff(MultiIndex{2}) == Complex(3.0, 0.0));
    CHECK(j.coeff(MultiIndex{3}) == Complex(1.0, 0.0));
  }

  SECTION("dimension mismatch is rejected") {
    Prepotential p(2);
    p.add_monomial(MultiIndex{1, 1}, 1.0);
    CHECK_THROWS_AS(jet_from_polynomial(p, kOrigin1, 2), DimensionError);
  }
}

TEST_CASE("jet arithmetic") {
  SECTION("(1 + z)(1 - z) = 1 - z^2") {
    const Jet z = Jet::variable(kOrigin1, 2, 0);
    const Jet prod = (z + Complex(1.0, 0.0)) * (Complex(1.0, 0.0) - z);
    CHECK(prod.coeff(MultiIndex{0}) == Complex(1.0, 0.0));
    CHECK(prod.coeff(MultiIndex{1}) == Complex(0.0, 0.0));
    CHECK(prod.coeff(MultiIndex{2}) == Complex(-1.0, 0.0));
  }

  SECTION("reciprocal(2 - z) at order 1") {
    const Jet z = Jet::variable(kOrigin1, 1, 0);
    const Jet r = reciprocal(Complex(2.0, 0.0) - z);
    CHECK(std::abs(r.coeff(MultiIndex{0}) - Complex(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(r.coeff(MultiIndex{1}) - Complex(0.25, 0.0)) < 1e-15);
  }

  SECTION("log of the constant jet e") {
    const Jet e = Jet::constant(kOrigin1, 3, Complex(std::exp(1.0), 0.0));
    const Jet l = log(e);
    CHECK(std::abs(l.value() - Complex(1.0, 0.0)) < 1e-15);
    CHECK(l.coeff(MultiIndex{1}) == Complex(0.0, 0.0));
  }

  SECTION("a * reciprocal(a) = 1 up to truncation") {
    GaussianRng rng(11);
    for (int t = 0; t < 10; ++t) {
      Jet a(kOrigin1, 4);
      a.set_coeff(MultiIndex{0}, Complex(1.0 + rng.uniform(), rng.gauss()));
      for (int d = 1; d <= 4; ++d)
        a.set_coeff(MultiIndex{d}, Complex(rng.gauss(), rng.gauss()));
      const Jet one = a * reciprocal(a);
      CHECK(std::abs(one.value() - Complex(1.0, 0.0)) < 1e-12);
      for (int d = 1; d <= 4; ++d)
        CHECK(std::abs(one.coeff(MultiIndex{d})) < 1e-12);
    }
  }

  SECTION("reciprocal and log need a unit constant term") {
    const Jet z = Jet::variable(kOrigin1, 2, 0);
    CHECK_THROWS_AS(reciprocal(z), NumericalError);
    CHECK_THROWS_AS(log(z), NumericalError);
  }

  SECTION("mismatched operands are rejected") {
    const Jet a = Jet::variable(kOrigin1, 2, 0);
    const Jet b = Jet::variable(kOrigin1, 3, 0);
    const Jet c = Jet::variable({Complex(1.0, 0.0)}, 2, 0);
    CHECK_THROWS_AS(a * b, DimensionError);
    CHECK_THROWS_AS(a + c, DimensionError);
  }
}

namespace {

// Jets with dyadic-rational coefficients: products and sums stay exact in
// double precision, so the algebraic laws can be checked with equality.
Jet random_dyadic_jet(GaussianRng& rng, int nvars, int order) {
  Jet j(std::vector<Complex>(nvars, Complex(0.0, 0.0)), order);
  for (const auto& beta : MultiIndex::all_up_to(nvars, order)) {
    const double re = std::floor(rng.uniform() * 16.0) / 8.0 - 1.0;
    const double im = std::floor(rng.uniform() * 16.0) / 8.0 - 1.0;
    j.set_coeff(beta, Complex(re, im));
  }
  return j;
}

}  // namespace

TEST_CASE("jet_mul is commutative and associative") {
  GaussianRng rng(7);
  for (int t = 0; t < 20; ++t) {
    const int nvars = 1 + static_cast<int>(rng.uniform() * 3);
    const Jet a = random_dyadic_jet(rng, nvars, 3);
    const Jet b = random_dyadic_jet(rng, nvars, 3);
    const Jet c = random_dyadic_jet(rng, nvars, 3);
    CHECK(jet_distance(a * b, b * a) == 0.0);
    CHECK(jet_distance((a * b) * c, a * (b * c)) == 0.0);
  }
}

TEST_CASE("truncation consistency") {
  GaussianRng rng(13);
  for (int t = 0; t < 10; ++t) {
    const Jet a = random_dyadic_jet(rng, 2, 4);
    const Jet b = random_dyadic_jet(rng, 2, 4);
    const Jet full = (a * b).truncated(3);
    const Jet low = a.truncated(3) * b.truncated(3);
    CHECK(jet_distance(full, low) == 0.0);
  }
}

TEST_CASE("finite-difference oracle") {
  SECTION("z^2 at 1") {
    auto f = [](const std::vector<Complex>& z) { return z[0] * z[0]; };
    const Jet j = finite_difference_jet(f, {Complex(1.0, 0.0)}, 2);
    CHECK(std::abs(j.derivative_value(MultiIndex{1}) - Complex(2.0, 0.0)) < 1e-6);
    CHECK(std::abs(j.derivative_value(MultiIndex{2}) - Complex(2.0, 0.0)) < 1e-6);
  }

  SECTION("quadratic normal form has Hessian i I at the origin") {
    const CatalogEntry e = make_quadratic(2);
    const Jet j = finite_difference_jet(wpgeom::testing::evaluator_of(e.u),
                                        {Complex(0, 0), Complex(0, 0)}, 2);
    CHECK(std::abs(j.derivative_value(MultiIndex{2, 0}) - kI) < 1e-6);
    CHECK(std::abs(j.derivative_value(MultiIndex{0, 2}) - kI) < 1e-6);
    CHECK(std::abs(j.derivative_value(MultiIndex{1, 1})) < 1e-6);
  }

  SECTION("exp(z) at 0 to order 4") {
    auto f = [](const std::vector<Complex>& z) { return std::exp(z[0]); };
    const Jet j = finite_difference_jet(f, kOrigin1, 4, 0.05);
    for (int k = 0; k <= 4; ++k) {
      const double want = 1.0 / MultiIndex{k}.factorial();
      CHECK(std::abs(j.coeff(MultiIndex{k}) - Complex(want, 0.0)) < 1e-6);
    }
  }

  SECTION("small steps are flagged") {
    auto f = [](const std::vector<Complex>& z) { return z[0]; };
    std::string warning;
    finite_difference_jet(f, kOrigin1, 1, 1e-6, &warning);
    CHECK(!warning.empty());
    CHECK_THROWS_AS(finite_difference_jet(f, kOrigin1, 1, 0.0), NumericalError);
  }
}

TEST_CASE("analytic jets match the finite-difference oracle on the catalog") {
  std::vector<CatalogEntry> entries;
  entries.push_back(make_quadratic(2));
  entries.push_back(make_cubic(Complex(0.1, 0.0)));
  entries.push_back(make_quartic_perturbed(
      2, {{MultiIndex{3, 0}, Complex(0.05, 0.0)},
          {MultiIndex{1, 3}, Complex(0.0, 0.02)}}));

  GaussianRng rng(2024);
  for (const auto& e : entries) {
    for (int t = 0; t < 20; ++t) {
      const auto z = random_point(rng, e.n, 0.8);
      const Jet analytic = jet_from_polynomial(e.u, z, 4);
      // step sized for fourth derivatives at double precision
      const Jet fd = finite_difference_jet(wpgeom::testing::evaluator_of(e.u),
                                           z, 4, 0.05);
      for (const auto& [beta, c] : analytic.coeffs()) {
        const double scale = std::max(1.0, std::abs(c));
        CHECK(std::abs(c - fd.coeff(beta)) / scale < 1e-6);
      }
    }
  }
}
