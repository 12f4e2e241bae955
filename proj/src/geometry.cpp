#include "wpgeom/geometry.hpp"

#include <cmath>

#include "wpgeom/errors.hpp"

namespace wpgeom {

namespace {

BiShape master_shape(int frame_order) {
  return BiShape{frame_order + 1, frame_order, frame_order};
}

constexpr BiShape kInverseShape{2, 1, 1};
constexpr BiShape kGammaShape{1, 1, 0};

}  // namespace

MetricBundle kahler_potential_and_metric(const PeriodFrame& frame,
                                         const std::vector<Complex>& point) {
  if (frame.order() < 2)
    throw DimensionError("frame order too low for the metric");
  const int n = frame.n();

  MetricBundle b;
  b.point = point;
  b.n = n;

  SymplecticForm q(n);
  b.exp_neg_k = -1.0 * q.pair_sesqui(frame.omega(), frame.omega(),
                                     master_shape(frame.order()));
  const Complex e = b.exp_neg_k.value();
  if (e.real() <= 0.0)
    throw NumericalError("e^{-K} <= 0 at the point: outside validity region");
  b.e_neg_k_value = e.real();
  b.k_pot = -1.0 * log(b.exp_neg_k);

  b.h = Tensor<BiJet, 2>(n, b.exp_neg_k);
  b.h0.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      b.h(i, j) = b.k_pot.d(i).dbar(j);
      b.h0(i, j) = b.h(i, j).value();
    }

  const Eigen::VectorXd eig = hermitian_eigenvalues(b.h0);
  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  for (int i = 0; i < n; ++i) {
    min_abs = std::min(min_abs, std::abs(eig(i)));
    max_abs = std::max(max_abs, std::abs(eig(i)));
  }
  b.h_condition = (min_abs == 0.0)
                      ? std::numeric_limits<double>::infinity()
                      : max_abs / min_abs;
  if (!(b.h_condition < 1e12))
    throw NumericalError("metric is numerically singular at the point");

  // h^{p qbar} solves h^{p qbar} h_{i qbar} = delta: the inverse of the
  // transposed coefficient matrix.
  b.h0_upper = b.h0.transpose().inverse();

  Tensor<BiJet, 2> h_t(n, b.exp_neg_k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h_t(i, j) = b.h(j, i).truncated(kInverseShape);
  b.h_upper = bijet_matrix_inverse(h_t);

  b.gamma = Tensor<BiJet, 3>(n, BiJet(point, kGammaShape));
  for (int p = 0; p < n; ++p)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i) {
        BiJet acc(point, kGammaShape);
        for (int qi = 0; qi < n; ++qi)
          acc += b.h_upper(p, qi).truncated(kGammaShape) *
                 b.h(i, qi).d(l).truncated(kGammaShape);
        b.gamma(p, l, i) = acc;
      }
  return b;
}

Tensor<Jet, 3> yukawa(const PeriodFrame& frame,
                      const std::vector<Complex>& point) {
  if (frame.order() < 3)
    throw DimensionError("frame order too low for the Yukawa coupling");
  const int n = frame.n();
  for (int i = 0; i < n; ++i)
    if (point[i] != frame.base_point()[i])
      throw DimensionError("yukawa point must be the frame base point");

  SymplecticForm q(n);
  const int f_order = frame.order() - 3;

  Tensor<Jet, 3> f(n, Jet(point, f_order));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        std::vector<Jet> d3;
        d3.reserve(frame.dim());
        for (const auto& comp : frame.omega())
          d3.push_back(comp.derivative(i).derivative(j).derivative(k));
        std::vector<Jet> omega_trunc;
        omega_trunc.reserve(frame.dim());
        for (const auto& comp : frame.omega())
          omega_trunc.push_back(comp.truncated(f_order));
        const Jet fijk = q.pair(d3, omega_trunc);
        // total symmetry: fill every permutation of (i, j, k)
        const int idx[3] = {i, j, k};
        int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& p : perms)
          f(idx[p[0]], idx[p[1]], idx[p[2]]) = fijk;
      }
  return f;
}

void attach_yukawa(MetricBundle& bundle, const Tensor<Jet, 3>& f) {
  bundle.f_jets = f;
  bundle.f0 = Tensor<Complex, 3>(bundle.n);
  for (int i = 0; i < bundle.n; ++i)
    for (int j = 0; j < bundle.n; ++j)
      for (int k = 0; k < bundle.n; ++k)
        bundle.f0(i, j, k) = f(i, j, k).value();
  bundle.has_yukawa = true;
}

void p_and_hodge_metric(MetricBundle& bundle) {
  if (!bundle.has_yukawa)
    throw DimensionError("p_and_hodge_metric requires the Yukawa tensor");
  const int n = bundle.n;
  const auto& pt = bundle.point;

  const BiJet e2k_jet = [&] {
    const BiJet r = reciprocal(bundle.exp_neg_k.truncated(kInverseShape));
    return r * r;
  }();

  auto f_bi = [&](int i, int j, int k) {
    return BiJet::from_holomorphic(bundle.f_jets(i, j, k), kInverseShape);
  };

  bundle.hh = Tensor<BiJet, 2>(n, BiJet(pt, kInverseShape));
  bundle.p0.resize(n, n);
  bundle.hh0.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BiJet acc(pt, kInverseShape);
      for (int p = 0; p < n; ++p)
        for (int qi = 0; qi < n; ++qi)
          for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
              acc += bundle.h_upper(p, qi) * bundle.h_upper(r, s) *
                     f_bi(i, p, r) * f_bi(j, qi, s).conjugate().truncated(kInverseShape);
      const BiJet p_entry = e2k_jet * acc;
      bundle.p0(i, j) = p_entry.value();
      bundle.hh(i, j) = 2.0 * bundle.h(i, j).truncated(kInverseShape) + p_entry;
      bundle.hh0(i, j) = bundle.hh(i, j).value();
    }
  bundle.has_hodge = true;
}

double trace_p(const MetricBundle& bundle) {
  if (!bundle.has_hodge)
    throw DimensionError("trace_p requires p_and_hodge_metric");
  Complex acc(0.0, 0.0);
  for (int i = 0; i < bundle.n; ++i)
    for (int j = 0; j < bundle.n; ++j)
      acc += bundle.h0_upper(i, j) * bundle.p0(i, j);
  return acc.real();
}

YukawaJet covariant_derivative_yukawa(const MetricBundle& bundle) {
  if (!bundle.has_yukawa)
    throw DimensionError("covariant_derivative_yukawa requires the Yukawa tensor");
  const int n = bundle.n;
  const auto& pt = bundle.point;
  if (bundle.f_jets(0, 0, 0).order() < 2)
    throw DimensionError("jet order too low for two covariant derivatives");

  YukawaJet y{Tensor<Complex, 3>(n),
              std::vector<Complex>(n),
              Tensor<Complex, 4>(n),
              Tensor<Complex, 5>(n),
              0.0,
              0.0,
              0.0,
              BiJet(pt, kInverseShape)};
  y.f = bundle.f0;

  const double e2k = 1.0 / (bundle.e_neg_k_value * bundle.e_neg_k_value);

  // K_l as jets of shape (1,1,0) (the anti-degree-0 slice is all the
  // holomorphic covariant derivative consumes).
  std::vector<BiJet> dk_jets;
  for (int l = 0; l < n; ++l) {
    dk_jets.push_back(bundle.k_pot.d(l).truncated(kGammaShape));
    y.d_k[l] = dk_jets[l].value();
  }

  auto f_bi = [&](int i, int j, int k) {
    return BiJet::from_holomorphic(bundle.f_jets(i, j, k), kGammaShape);
  };

  // nabla F as mixed jets (values + one holomorphic order for nabla^2).
  Tensor<BiJet, 4> nf(n, BiJet(pt, kGammaShape));
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          BiJet acc = BiJet::from_holomorphic(
              bundle.f_jets(i, j, k).derivative(l), kGammaShape);
          acc += 2.0 * (dk_jets[l] * f_bi(i, j, k));
          for (int p = 0; p < n; ++p) {
            acc -= bundle.gamma(p, l, i) * f_bi(p, j, k);
            acc -= bundle.gamma(p, l, j) * f_bi(i, p, k);
            acc -= bundle.gamma(p, l, k) * f_bi(i, j, p);
          }
          nf(l, i, j, k) = acc;
          y.nabla_f(l, i, j, k) = acc.value();
        }

  // nabla^2 F values (all four lower slots of nabla F get corrected).
  for (int m = 0; m < n; ++m)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            Complex acc = nf(l, i, j, k).derivative_value(
                MultiIndex::unit(n, m), MultiIndex(n));
            acc += 2.0 * y.d_k[m] * y.nabla_f(l, i, j, k);
            for (int p = 0; p < n; ++p) {
              acc -= bundle.gamma(p, m, l).value() * y.nabla_f(p, i, j, k);
              acc -= bundle.gamma(p, m, i).value() * y.nabla_f(l, p, j, k);
              acc -= bundle.gamma(p, m, j).value() * y.nabla_f(l, i, p, k);
              acc -= bundle.gamma(p, m, k).value() * y.nabla_f(l, i, j, p);
            }
            y.nabla2_f(m, l, i, j, k) = acc;
          }

  // Norms: every slot contracted with the inverse metric, weight e^{2K} per
  // the two line-bundle factors.
  const Matrix& g = bundle.h0_upper;
  auto contract3 = [&](auto&& a, auto&& b) {
    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int ia = 0; ia < n; ++ia)
            for (int jb = 0; jb < n; ++jb)
              for (int kc = 0; kc < n; ++kc)
                acc += a(i, j, k) * std::conj(b(ia, jb, kc)) * g(i, ia) *
                       g(j, jb) * g(k, kc);
    return acc;
  };
  y.f0 = (e2k * contract3([&](int i, int j, int k) { return bundle.f0(i, j, k); },
                          [&](int i, int j, int k) { return bundle.f0(i, j, k); }))
             .real();

  Complex acc1(0.0, 0.0);
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      acc1 += g(l, m) *
              contract3([&](int i, int j, int k) { return y.nabla_f(l, i, j, k); },
                        [&](int i, int j, int k) { return y.nabla_f(m, i, j, k); });
  y.f1 = (e2k * acc1).real();

  Complex acc2(0.0, 0.0);
  for (int m = 0; m < n; ++m)
    for (int mp = 0; mp < n; ++mp)
      for (int l = 0; l < n; ++l)
        for (int lp = 0; lp < n; ++lp)
          acc2 += g(m, mp) * g(l, lp) *
                  contract3(
                      [&](int i, int j, int k) { return y.nabla2_f(m, l, i, j, k); },
                      [&](int i, int j, int k) { return y.nabla2_f(mp, lp, i, j, k); });
  y.f2 = (e2k * acc2).real();

  // |F|^2 as a mixed jet for the Laplacian.
  const BiJet e2k_jet = [&] {
    const BiJet r = reciprocal(bundle.exp_neg_k.truncated(kInverseShape));
    return r * r;
  }();
  auto f_bi2 = [&](int i, int j, int k) {
    return BiJet::from_holomorphic(bundle.f_jets(i, j, k), kInverseShape);
  };
  BiJet f0_acc(pt, kInverseShape);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int ia = 0; ia < n; ++ia)
          for (int jb = 0; jb < n; ++jb)
            for (int kc = 0; kc < n; ++kc)
              f0_acc += f_bi2(i, j, k) *
                        f_bi2(ia, jb, kc).conjugate().truncated(kInverseShape) *
                        bundle.h_upper(i, ia) * bundle.h_upper(j, jb) *
                        bundle.h_upper(k, kc);
  y.f0_jet = e2k_jet * f0_acc;
  return y;
}

double complex_laplacian(const BiJet& f, const MetricBundle& bundle) {
  Complex acc(0.0, 0.0);
  for (int i = 0; i < bundle.n; ++i)
    for (int j = 0; j < bundle.n; ++j)
      acc += bundle.h0_upper(i, j) *
             f.derivative_value(MultiIndex::unit(bundle.n, i),
                                MultiIndex::unit(bundle.n, j));
  return acc.real();
}

double gradient_norm(const BiJet& f, const MetricBundle& bundle) {
  Complex acc(0.0, 0.0);
  for (int i = 0; i < bundle.n; ++i)
    for (int j = 0; j < bundle.n; ++j) {
      const Complex di =
          f.derivative_value(MultiIndex::unit(bundle.n, i), MultiIndex(bundle.n));
      const Complex dj =
          f.derivative_value(MultiIndex::unit(bundle.n, j), MultiIndex(bundle.n));
      acc += bundle.h0_upper(i, j) * di * std::conj(dj);
    }
  return std::sqrt(std::max(0.0, 2.0 * acc.real()));
}

MetricBundle build_bundle(const PeriodFrame& frame,
                          const std::vector<Complex>& point) {
  MetricBundle b = kahler_potential_and_metric(frame, point);
  attach_yukawa(b, yukawa(frame, point));
  p_and_hodge_metric(b);
  return b;
}

}  // namespace wpgeom
