#pragma once

#include <vector>

#include "wpgeom/bijet.hpp"
#include "wpgeom/jet.hpp"
#include "wpgeom/linalg.hpp"
#include "wpgeom/periods.hpp"
#include "wpgeom/tensor.hpp"

namespace wpgeom {

/// Everything the curvature and verification layers consume at one point.
///
/// Index conventions: h(i,j) stores h_{i jbar}; h_upper(i,j) stores the
/// inverse h^{i jbar} (so h_upper = inverse of h transposed); Gamma(p,l,i)
/// stores the Christoffel symbol with upper index p. F(i,j,k) is the totally
/// symmetric cubic tensor.
struct MetricBundle {
  std::vector<Complex> point;
  int n = 0;

  BiJet exp_neg_k;  // e^{-K}; positive at regular points
  BiJet k_pot;      // K = -log e^{-K}
  double e_neg_k_value = 0.0;

  Tensor<BiJet, 2> h;        // metric coefficients as mixed jets
  Matrix h0;                 // values h_{i jbar}
  Matrix h0_upper;           // values h^{i jbar}
  double h_condition = 0.0;  // 2-norm condition number of h0
  Tensor<BiJet, 2> h_upper;  // inverse metric jets (shape (2,1,1))
  Tensor<BiJet, 3> gamma;    // Christoffels, shape (1,1,0)

  bool has_yukawa = false;
  Tensor<Jet, 3> f_jets;     // F_{ijk} as holomorphic jets
  Tensor<Complex, 3> f0;     // F_{ijk} values

  bool has_hodge = false;
  Matrix p0;   // P_{i jbar} values
  Matrix hh0;  // (hodge metric) = 2 h + P values
  Tensor<BiJet, 2> hh;  // hodge metric as mixed jets, shape (2,1,1)

  Jet jet_zero() const { return Jet(point, 0); }
};

/// K = -log(-Q(Omega, conj Omega)), the metric h = dd-bar K, its inverse and
/// the Christoffel symbols Gamma^p_{li} = h^{p qbar} d_l h_{i qbar}.
///
/// Throws NumericalError when e^{-K} <= 0 at the point (outside the validity
/// region) or when h is numerically singular (condition number > 1e12).
/// Requires frame order >= 2; order >= 4 for downstream curvature use.
MetricBundle kahler_potential_and_metric(const PeriodFrame& frame,
                                         const std::vector<Complex>& point);

/// F_{ijk} = Q(d_i d_j d_k Omega, Omega) as holomorphic jets of order
/// (frame order - 3). Total symmetry holds by construction and is asserted.
Tensor<Jet, 3> yukawa(const PeriodFrame& frame,
                      const std::vector<Complex>& point);

/// Stores the Yukawa jets (and their values) into the bundle.
void attach_yukawa(MetricBundle& bundle, const Tensor<Jet, 3>& f);

/// P_{i jbar} = e^{2K} h^{p qbar} h^{r sbar} F_{ipr} conj(F_{jqs}) and the
/// Hodge metric 2h + P. Requires attach_yukawa first.
void p_and_hodge_metric(MetricBundle& bundle);

/// h-trace of P; equals |F|^2 (checked against YukawaJet::f0 in tests).
double trace_p(const MetricBundle& bundle);

/// The Yukawa coupling with its first two covariant derivatives and norms.
/// nabla_f(l,i,j,k) = d_l F_{ijk} + 2 K_l F_{ijk} - Gamma-corrections on each
/// lower index; nabla2_f iterates once more (the tensor gains a slot).
/// f_m = e^{2K} <nabla^m F, nabla^m F> with every index contracted by the
/// inverse metric.
struct YukawaJet {
  Tensor<Complex, 3> f;        // F values
  std::vector<Complex> d_k;    // K_l = d_l K
  Tensor<Complex, 4> nabla_f;  // [l][i][j][k]
  Tensor<Complex, 5> nabla2_f; // [m][l][i][j][k]
  double f0 = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  BiJet f0_jet;  // |F|^2 as a mixed jet (for the Laplacian)
};

/// Requires frame order >= 5 (so that F has jet order >= 2).
YukawaJet covariant_derivative_yukawa(const MetricBundle& bundle);

/// Complex Laplacian h^{i jbar} d_i dbar_j f at the bundle's point.
double complex_laplacian(const BiJet& f, const MetricBundle& bundle);

/// |grad f|_h for a real scalar f: sqrt(2 h^{i jbar} (d_i f) conj(d_j f)).
double gradient_norm(const BiJet& f, const MetricBundle& bundle);

/// Convenience: metric + yukawa + hodge metric in one call.
MetricBundle build_bundle(const PeriodFrame& frame,
                          const std::vector<Complex>& point);

}  // namespace wpgeom
