#include "wpgeom/siegel.hpp"

#include "wpgeom/errors.hpp"
#include "wpgeom/geometry.hpp"
#include "wpgeom/periods.hpp"

namespace wpgeom {

namespace {

// tau = sign * B A^{-1} for the isotropic plane spanned by Omega and
// conj(d_a Omega + K_a Omega), basis vectors as columns.
Matrix tau_at(const CatalogEntry& entry, const std::vector<Complex>& point,
              int sign) {
  const int n = entry.n;
  const Jet uj = jet_from_polynomial(entry.u, point, 3);
  const PeriodFrame frame = build_period_frame(uj, n);

  SymplecticForm q(n);
  const BiJet e =
      -1.0 * q.pair_sesqui(frame.omega(), frame.omega(), BiShape{1, 1, 0});
  const Complex e0 = e.value();
  if (std::abs(e0) < 1e-14)
    throw NumericalError("pairing degenerates: cannot embed this point");

  const Vector omega = frame.value();
  Matrix basis(frame.dim(), n + 1);
  basis.col(0) = omega;
  for (int a = 0; a < n; ++a) {
    const Complex k_a =
        -e.d(a).value() / e0;  // d_a K = -d_a(e^{-K}) / e^{-K}
    const Vector chi =
        frame.derivative(MultiIndex::unit(n, a)) + k_a * omega;
    basis.col(a + 1) = chi.conjugate();
  }

  const Matrix a_block = basis.topRows(n + 1);
  const Matrix b_block = basis.bottomRows(n + 1);
  if (condition_number(a_block) > 1e12)
    throw NumericalError("embedding block A is singular at this point");
  return static_cast<double>(sign) *
         (b_block * a_block.partialPivLu().inverse());
}

}  // namespace

int siegel_sign() {
  // Fixed once by positivity of Im tau at the origin of the quadratic entry.
  static const int sign = [] {
    const CatalogEntry e = make_quadratic(1);
    const std::vector<Complex> origin(1, Complex(0.0, 0.0));
    const Matrix tau = tau_at(e, origin, +1);
    const Eigen::VectorXd eig = hermitian_eigenvalues(tau.imag().cast<Complex>());
    return eig(0) > 0.0 ? +1 : -1;
  }();
  return sign;
}

SiegelPoint siegel_embed(const std::vector<Complex>& point,
                         const CatalogEntry& entry) {
  if (entry.name != "quadratic")
    throw ConfigError(
        "siegel_embed is defined for the quadratic catalog entry only");
  if (static_cast<int>(point.size()) != entry.n)
    throw DimensionError("point dimension does not match entry");

  SiegelPoint out;
  out.tau = tau_at(entry, point, siegel_sign());
  out.x = out.tau.real();
  out.y = out.tau.imag();
  out.symmetry_defect =
      (out.tau - Matrix(out.tau.transpose())).cwiseAbs().maxCoeff();
  const Eigen::VectorXd eig = hermitian_eigenvalues(out.y.cast<Complex>());
  out.min_im_eigenvalue = eig(0);
  return out;
}

}  // namespace wpgeom
