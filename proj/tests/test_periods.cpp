#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "wpgeom/catalog.hpp"
#include "wpgeom/errors.hpp"
#include "wpgeom/finite_diff.hpp"
#include "wpgeom/periods.hpp"
#include "test_helpers.hpp"

using namespace wpgeom;
using wpgeom::testing::random_point;

namespace {
const Complex kI(0.0, 1.0);

PeriodFrame frame_at(const CatalogEntry& e, const std::vector<Complex>& z,
                     int order = 6) {
  return build_period_frame(jet_from_polynomial(e.u, z, order), e.n);
}
}  // namespace

TEST_CASE("period frame of the quadratic entry") {
  const CatalogEntry e = make_quadratic(2);

  SECTION("at the origin") {
    const PeriodFrame f = frame_at(e, {Complex(0, 0), Complex(0, 0)});
    const Vector v = f.value();
    CHECK(v(0) == Complex(1.0, 0.0));
    CHECK(v(1) == Complex(0.0, 0.0));
    CHECK(v(2) == Complex(0.0, 0.0));
    CHECK(std::abs(v(3) + kI) < 1e-15);
    CHECK(v(4) == Complex(0.0, 0.0));
    CHECK(v(5) == Complex(0.0, 0.0));
  }

  SECTION("at a general point: (1, z/sqrt2, -i, i z/sqrt2)") {
    const std::vector<Complex> z{Complex(0.3, -0.2), Complex(-0.1, 0.4)};
    const PeriodFrame f = frame_at(e, z);
    const Vector v = f.value();
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(v(0) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(v(1) - s * z[0]) < 1e-15);
    CHECK(std::abs(v(2) - s * z[1]) < 1e-15);
    CHECK(std::abs(v(3) + kI) < 1e-15);
    CHECK(std::abs(v(4) - kI * s * z[0]) < 1e-15);
    CHECK(std::abs(v(5) - kI * s * z[1]) < 1e-15);
  }
}

TEST_CASE("third derivative of the cubic frame") {
  // u = -i + (i/2) z^2 + c z^3 gives Omega = (1, z/sqrt2, -i - (c/2) z^3,
  // (i z + 3 c z^2)/sqrt2), so d^3 Omega = (0, 0, -3c, 0) at every z.
  const Complex c(0.07, 0.0);
  const CatalogEntry e = make_cubic(c);

  for (double t : {0.0, 0.35}) {
    const std::vector<Complex> z{Complex(t, 0.1 * t)};
    const PeriodFrame f = frame_at(e, z);
    const Vector d3 = f.derivative(MultiIndex{3});
    CHECK(std::abs(d3(0)) < 1e-13);
    CHECK(std::abs(d3(1)) < 1e-13);
    CHECK(std::abs(d3(2) + 3.0 * c) < 1e-13);
    CHECK(std::abs(d3(3)) < 1e-13);
  }

  SECTION("cross-checked against the finite-difference oracle") {
    const std::vector<Complex> z{Complex(0.2, -0.15)};
    const PeriodFrame f = frame_at(e, z);
    // component n+1 of the frame, evaluated directly from the polynomial
    auto comp = [&](const std::vector<Complex>& w) {
      Complex u = e.u.eval(w);
      u -= 0.5 * w[0] * e.u.eval_derivative(0, w);
      return u;
    };
    const Jet fd = finite_difference_jet(comp, z, 3, 0.05);
    for (int d = 0; d <= 3; ++d) {
      const Complex want = f.omega()[2].derivative_value(MultiIndex{d});
      CHECK(std::abs(fd.derivative_value(MultiIndex{d}) - want) < 1e-7);
    }
  }
}

TEST_CASE("symplectic pairing") {
  SECTION("basis pairs carry the factor i") {
    const int n = 2;
    SymplecticForm q(n);
    Vector e1 = Vector::Zero(q.dim());
    Vector en2 = Vector::Zero(q.dim());
    e1(0) = 1.0;
    en2(n + 1) = 1.0;
    CHECK(q.pair(e1, en2) == kI);
    CHECK(q.pair(en2, e1) == -kI);
  }

  SECTION("skew symmetry on random vectors, exactly") {
    GaussianRng rng(5);
    SymplecticForm q(3);
    for (int t = 0; t < 50; ++t) {
      Vector a(q.dim()), b(q.dim());
      for (int i = 0; i < q.dim(); ++i) {
        a(i) = Complex(rng.gauss(), rng.gauss());
        b(i) = Complex(rng.gauss(), rng.gauss());
      }
      CHECK(q.pair(a, b) + q.pair(b, a) == Complex(0.0, 0.0));
      Vector re = a.real().cast<Complex>();
      CHECK(q.pair(re, re) == Complex(0.0, 0.0));
    }
  }

  SECTION("Q(Omega, conj Omega) = -2 + |z|^2 on the quadratic entry") {
    const CatalogEntry e = make_quadratic(2);
    GaussianRng rng(17);
    SymplecticForm q(2);
    for (int t = 0; t < 20; ++t) {
      const auto z = random_point(rng, 2, 1.3);
      const PeriodFrame f = frame_at(e, z);
      const Complex val = q.pair(f.value(), f.value().conjugate());
      const double z2 = std::norm(z[0]) + std::norm(z[1]);
      CHECK(std::abs(val - Complex(-2.0 + z2, 0.0)) < 1e-12);
    }
  }

  SECTION("length mismatch is rejected") {
    SymplecticForm q(2);
    CHECK_THROWS_AS(q.pair(Vector::Zero(4), Vector::Zero(6)), DimensionError);
  }
}

TEST_CASE("filtration") {
  const CatalogEntry e = make_quadratic(2);
  GaussianRng rng(23);

  SECTION("dimensions are (1, n+1, 2n+1) at regular points") {
    for (int t = 0; t < 10; ++t) {
      const auto z = random_point(rng, 2, 1.2);
      const PeriodFrame f = frame_at(e, z);
      const Filtration fil = build_filtration(f, z);
      CHECK(fil.F3.cols() == 1);
      CHECK(fil.F2.cols() == 3);
      CHECK(fil.F1.cols() == 5);
    }
  }

  SECTION("Q(F3, F1) vanishes by construction") {
    SymplecticForm q(2);
    for (int t = 0; t < 20; ++t) {
      const auto z = random_point(rng, 2, 1.2);
      const Filtration fil = build_filtration(frame_at(e, z), z);
      for (int c = 0; c < fil.F1.cols(); ++c)
        CHECK(std::abs(q.pair(fil.F3.col(0), fil.F1.col(c))) < 1e-10);
    }
  }

  SECTION("the flag is nested") {
    const auto z = random_point(rng, 2, 1.0);
    const Filtration fil = build_filtration(frame_at(e, z), z);
    CHECK(projection_residual(fil.F2, fil.F3) < 1e-12);
    CHECK(projection_residual(fil.F1, fil.F2) < 1e-12);
  }
}

TEST_CASE("hodge-riemann relations") {
  SECTION("quadratic entry passes inside the validity ball") {
    const CatalogEntry e = make_quadratic(2);
    GaussianRng rng(31);
    for (int t = 0; t < 20; ++t) {
      const auto z = random_point(rng, 2, 1.3);
      const Filtration fil = build_filtration(frame_at(e, z), z);
      const HodgeRiemannReport rep = check_hodge_riemann(fil);
      CHECK(rep.relations_12_3_pass);
      CHECK(rep.relation_4_pass);
      CHECK(rep.max_q_f3_f1 < 1e-10);
      CHECK(rep.max_q_f2_f2 < 1e-10);
      for (double w : rep.weil_min) CHECK(w > 0.0);
      const auto dims = rep.decomposition.dims();
      CHECK(dims[0] == 1);
      CHECK(dims[1] == 2);
      CHECK(dims[2] == 2);
      CHECK(dims[3] == 1);
      CHECK(rep.conjugation_defect < 1e-10);
    }
  }

  SECTION("positivity fails outside the ball") {
    const CatalogEntry e = make_quadratic(1);
    const std::vector<Complex> z{Complex(1.5, 0.0)};  // |z|^2 = 2.25
    const Filtration fil = build_filtration(frame_at(e, z), z);
    const HodgeRiemannReport rep = check_hodge_riemann(fil);
    CHECK_FALSE(rep.relation_4_pass);
    CHECK(rep.weil_min[0] < 0.0);  // the (3,0) pairing is e^{-K} = 2 - |z|^2
    CHECK(rep.witness.size() == fil.F3.rows());
  }

  SECTION("a random Lagrangian F2 pairs to zero with itself") {
    // span of the columns of [I; S] is Lagrangian iff S is symmetric
    GaussianRng rng(41);
    const int n = 2;
    SymplecticForm q(n);
    Matrix s(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        s(i, j) = Complex(rng.gauss(), rng.gauss());
        s(j, i) = s(i, j);
      }
    Matrix f2(2 * n + 2, n + 1);
    f2.topRows(n + 1) = Matrix::Identity(n + 1, n + 1);
    f2.bottomRows(n + 1) = s;
    double worst = 0.0;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        worst = std::max(worst, std::abs(q.pair(f2.col(a), f2.col(b))));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("horizontality") {
  GaussianRng rng(47);

  SECTION("quadratic and cubic frames are horizontal") {
    const CatalogEntry quad = make_quadratic(2);
    const CatalogEntry cub = make_cubic(Complex(0.1, 0.0));
    for (int t = 0; t < 20; ++t) {
      const auto z2 = random_point(rng, 2, 1.2);
      CHECK(check_horizontality(frame_at(quad, z2)).max_residual < 1e-10);
      const auto z1 = random_point(rng, 1, 0.8);
      CHECK(check_horizontality(frame_at(cub, z1)).max_residual < 1e-10);
    }
  }

  SECTION("a corrupted frame is caught") {
    // needs an entry with curved second derivatives; the quadratic frame is
    // affine in z, so its corrupted variants stay trivially horizontal
    const CatalogEntry e = make_cubic(Complex(0.1, 0.0));
    const std::vector<Complex> z{Complex(0.4, 0.1)};
    const PeriodFrame good = frame_at(e, z);
    std::vector<Jet> omega = good.omega();
    std::swap(omega[1], omega[2]);  // swap two components
    const PeriodFrame bad(e.n, std::move(omega));
    CHECK(check_horizontality(bad).max_residual > 1e-2);
  }
}
