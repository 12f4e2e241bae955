#include "wpgeom/curvature.hpp"

#include <cmath>

#include "wpgeom/errors.hpp"

namespace wpgeom {

double CurvatureTensor::symmetry_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Complex v = r(i, j, k, l);
          worst = std::max(worst, std::abs(v - r(k, j, i, l)));
          worst = std::max(worst, std::abs(v - r(i, l, k, j)));
          worst = std::max(worst, std::abs(v - std::conj(r(j, i, l, k))));
        }
  return worst;
}

CurvatureTensor kahler_curvature_generic(const Tensor<BiJet, 2>& g,
                                         const Matrix& g_upper) {
  const int n = g.extent();
  CurvatureTensor out;
  out.n = n;
  out.r = Tensor<Complex, 4>(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const int nv = g(0, 0).vars();
          Complex acc = -g(k, l).derivative_value(MultiIndex::unit(nv, i),
                                                  MultiIndex::unit(nv, j));
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              acc += g_upper(p, q) *
                     g(k, q).derivative_value(MultiIndex::unit(nv, i),
                                              MultiIndex(nv)) *
                     g(p, l).derivative_value(MultiIndex(nv),
                                              MultiIndex::unit(nv, j));
          // flip into the kSpaceFormPositive convention
          out.r(i, j, k, l) = -acc;
        }
  return out;
}

Tensor<BiJet, 4> kahler_curvature_generic_jets(const Tensor<BiJet, 2>& g,
                                               const Tensor<BiJet, 2>& g_upper) {
  const int n = g.extent();
  const BiShape shape{1, 1, 0};
  const auto& base = g(0, 0).base_point();
  Tensor<BiJet, 4> out(n, BiJet(base, shape));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          BiJet acc = -1.0 * g(k, l).d(i).dbar(j).truncated(shape);
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              acc += g_upper(p, q).truncated(shape) *
                     g(k, q).d(i).truncated(shape) *
                     g(p, l).dbar(j).truncated(shape);
          out(i, j, k, l) = -1.0 * acc;
        }
  return out;
}

CurvatureTensor strominger_curvature(const MetricBundle& bundle) {
  if (!bundle.has_yukawa)
    throw DimensionError("strominger_curvature requires the Yukawa tensor");
  const int n = bundle.n;
  const double e2k = 1.0 / (bundle.e_neg_k_value * bundle.e_neg_k_value);

  CurvatureTensor out;
  out.n = n;
  out.r = Tensor<Complex, 4>(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Complex acc = bundle.h0(i, j) * bundle.h0(k, l) +
                        bundle.h0(i, l) * bundle.h0(k, j);
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
              acc -= e2k * bundle.h0_upper(p, q) * bundle.f0(i, k, p) *
                     std::conj(bundle.f0(j, l, q));
          out.r(i, j, k, l) = acc;
        }
  return out;
}

CurvatureTensor wp_curvature_generic(const MetricBundle& bundle) {
  return kahler_curvature_generic(bundle.h, bundle.h0_upper);
}

HodgeCurvature hodge_curvature(const MetricBundle& bundle) {
  if (!bundle.has_hodge)
    throw DimensionError("hodge_curvature requires p_and_hodge_metric");
  HodgeCurvature out;
  out.hh_upper = bundle.hh0.transpose().inverse();
  out.r = kahler_curvature_generic(bundle.hh, out.hh_upper);
  return out;
}

RicciTensor ricci_from_curvature(const CurvatureTensor& r,
                                 const Matrix& g_upper) {
  const int n = r.n;
  RicciTensor out;
  out.n = n;
  out.ric = Matrix::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) {
      Complex acc(0.0, 0.0);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += g_upper(k, l) * r.r(k, l, a, i);
      out.ric(a, i) = -acc;
    }
  return out;
}

namespace {

double h_norm2(const Matrix& h0, const Vector& v) {
  Complex acc(0.0, 0.0);
  for (int i = 0; i < h0.rows(); ++i)
    for (int j = 0; j < h0.cols(); ++j)
      acc += h0(i, j) * v(i) * std::conj(v(j));
  return acc.real();
}

}  // namespace

SectionalValues sectional_evaluators(const CurvatureTensor& r, const Matrix& h0,
                                     const Vector& xi, const Vector& eta) {
  if (xi.norm() == 0.0 || eta.norm() == 0.0)
    throw NumericalError("sectional curvature of a zero vector");
  const int n = r.n;

  auto eval = [&](const Vector& a, const Vector& b) {
    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            acc += r.r(i, j, k, l) * a(i) * std::conj(a(j)) * b(k) *
                   std::conj(b(l));
    return acc.real();
  };

  const double nxi = h_norm2(h0, xi);
  const double neta = h_norm2(h0, eta);
  SectionalValues out{};
  out.holomorphic_sectional = -eval(xi, xi) / (nxi * nxi);
  out.bisectional = -eval(xi, eta) / (nxi * neta);
  return out;
}

CurvatureGradient covariant_derivative_curvature(const Tensor<BiJet, 4>& r_jets,
                                                 const Tensor<BiJet, 3>& gamma) {
  const int n = r_jets.extent();
  const int nv = r_jets(0, 0, 0, 0).vars();
  CurvatureGradient out;
  out.nabla_r = Tensor<Complex, 5>(n);
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            Complex acc = r_jets(i, j, k, l).derivative_value(
                MultiIndex::unit(nv, m), MultiIndex(nv));
            for (int p = 0; p < n; ++p) {
              acc -= gamma(p, m, i).value() * r_jets(p, j, k, l).value();
              acc -= gamma(p, m, k).value() * r_jets(i, j, p, l).value();
            }
            out.nabla_r(m, i, j, k, l) = acc;
            out.max_abs = std::max(out.max_abs, std::abs(acc));
          }
  return out;
}

}  // namespace wpgeom
