#pragma once

#include "wpgeom/geometry.hpp"
#include "wpgeom/tensor.hpp"

namespace wpgeom {

/// Sign convention tag carried by every curvature tensor.
///
/// kSpaceFormPositive: the two-metric-term expression h h + h h enters with
/// positive sign, the Ricci tensor is minus the inverse-metric trace over the
/// first index pair, and sectional quantities flip the sign back. The tag is
/// pinned by one requirement: contracting the closed curvature formula this
/// way reproduces the Ricci identity
///   Ric_{a ibar} = -(n+1) h_{a ibar} + e^{2K} (F contracted with conj F)
/// exactly. That requirement is asserted in the test suite.
enum class CurvatureSign { kSpaceFormPositive };

struct CurvatureTensor {
  int n = 0;
  Tensor<Complex, 4> r;  // R_{i jbar k lbar}
  CurvatureSign tag = CurvatureSign::kSpaceFormPositive;

  /// Worst violation of the Kaehler symmetries
  /// R_{ij̄kl̄} = R_{kj̄il̄} = R_{il̄kj̄} and R_{ij̄kl̄} = conj(R_{jīlk̄}).
  double symmetry_defect() const;
};

struct RicciTensor {
  int n = 0;
  Matrix ric;  // Ric_{a ibar}
  CurvatureSign tag = CurvatureSign::kSpaceFormPositive;

  double hermitian_defect() const {
    return (ric - ric.adjoint()).cwiseAbs().maxCoeff();
  }
};

/// Curvature of a Kaehler metric from its coefficient jets:
///   R_{ij̄kl̄} = -d_i dbar_j g_{kl̄} + g^{pq̄} (d_i g_{kq̄})(dbar_j g_{pl̄}),
/// sign-flipped into the kSpaceFormPositive convention. g_upper holds the
/// values g^{p qbar}.
CurvatureTensor kahler_curvature_generic(const Tensor<BiJet, 2>& g,
                                         const Matrix& g_upper);

/// Same computation kept as mixed jets (one holomorphic order), for the
/// covariant derivative of the curvature.
Tensor<BiJet, 4> kahler_curvature_generic_jets(const Tensor<BiJet, 2>& g,
                                               const Tensor<BiJet, 2>& g_upper);

/// Closed-form curvature of the Weil-Petersson metric:
///   R_{ij̄kl̄} = h_{ij̄} h_{kl̄} + h_{il̄} h_{kj̄}
///               - e^{2K} h^{pq̄} F_{ikp} conj(F_{jlq}).
CurvatureTensor strominger_curvature(const MetricBundle& bundle);

/// Generic engine applied to the Weil-Petersson metric of the bundle.
CurvatureTensor wp_curvature_generic(const MetricBundle& bundle);

/// Generic engine applied to the Hodge metric 2h + P (no closed formula is
/// available for it). Also returns the inverse-metric values used.
struct HodgeCurvature {
  CurvatureTensor r;
  Matrix hh_upper;
};
HodgeCurvature hodge_curvature(const MetricBundle& bundle);

/// Ric_{a ibar} = -(g^{k lbar} R_{k lbar a ibar}).
RicciTensor ricci_from_curvature(const CurvatureTensor& r,
                                 const Matrix& g_upper);

struct SectionalValues {
  double holomorphic_sectional;  // H(xi)
  double bisectional;            // B(xi, eta)
};

/// H(xi) = -R(xi, conj xi, xi, conj xi)/|xi|^4 and
/// B(xi, eta) = -R(xi, conj xi, eta, conj eta)/(|xi|^2 |eta|^2), with norms
/// taken in the metric h0 the tensor was built from.
SectionalValues sectional_evaluators(const CurvatureTensor& r, const Matrix& h0,
                                     const Vector& xi, const Vector& eta);

struct CurvatureGradient {
  Tensor<Complex, 5> nabla_r;  // [m][i][jbar][k][lbar]
  double max_abs = 0.0;
};

/// nabla_m R_{ij̄kl̄} = d_m R_{ij̄kl̄} - Gamma^p_{mi} R_{pj̄kl̄}
///                    - Gamma^p_{mk} R_{ij̄pl̄}.
CurvatureGradient covariant_derivative_curvature(const Tensor<BiJet, 4>& r_jets,
                                                 const Tensor<BiJet, 3>& gamma);

}  // namespace wpgeom
