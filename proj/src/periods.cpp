#include "wpgeom/periods.hpp"

#include <cmath>

#include "wpgeom/errors.hpp"

namespace wpgeom {

namespace {
const Complex kI(0.0, 1.0);
}

Complex SymplecticForm::pair(const Vector& xi, const Vector& eta) const {
  if (xi.size() != dim() || eta.size() != dim())
    throw DimensionError("pairing arguments must have length 2n+2");
  Complex acc(0.0, 0.0);
  for (int a = 0; a <= n_; ++a)
    acc += xi(a) * eta(n_ + 1 + a) - xi(n_ + 1 + a) * eta(a);
  return kI * acc;
}

Jet SymplecticForm::pair(const std::vector<Jet>& xi,
                         const std::vector<Jet>& eta) const {
  if (static_cast<int>(xi.size()) != dim() ||
      static_cast<int>(eta.size()) != dim())
    throw DimensionError("pairing arguments must have length 2n+2");
  Jet acc(xi[0].base_point(), xi[0].order());
  for (int a = 0; a <= n_; ++a) {
    acc += xi[a] * eta[n_ + 1 + a];
    acc -= xi[n_ + 1 + a] * eta[a];
  }
  return kI * acc;
}

BiJet SymplecticForm::pair_sesqui(const std::vector<Jet>& xi,
                                  const std::vector<Jet>& eta,
                                  BiShape shape) const {
  if (static_cast<int>(xi.size()) != dim() ||
      static_cast<int>(eta.size()) != dim())
    throw DimensionError("pairing arguments must have length 2n+2");
  BiJet acc(xi[0].base_point(), shape);
  auto hol = [&](int c) { return BiJet::from_holomorphic(xi[c], shape); };
  auto anti = [&](int c) {
    return BiJet::from_holomorphic(eta[c], shape).conjugate().truncated(shape);
  };
  for (int a = 0; a <= n_; ++a) {
    acc += hol(a) * anti(n_ + 1 + a);
    acc -= hol(n_ + 1 + a) * anti(a);
  }
  return kI * acc;
}

Matrix SymplecticForm::matrix() const {
  Matrix q = Matrix::Zero(dim(), dim());
  for (int a = 0; a <= n_; ++a) {
    q(a, n_ + 1 + a) = kI;
    q(n_ + 1 + a, a) = -kI;
  }
  return q;
}

PeriodFrame::PeriodFrame(int n, std::vector<Jet> omega)
    : n_(n), omega_(std::move(omega)) {
  if (static_cast<int>(omega_.size()) != 2 * n_ + 2)
    throw DimensionError("period frame needs 2n+2 components");
}

Vector PeriodFrame::value() const {
  Vector v(dim());
  for (int c = 0; c < dim(); ++c) v(c) = omega_[c].value();
  return v;
}

Vector PeriodFrame::derivative(const MultiIndex& beta) const {
  Vector v(dim());
  for (int c = 0; c < dim(); ++c) v(c) = omega_[c].derivative_value(beta);
  return v;
}

PeriodFrame PeriodFrame::scaled(Complex lambda) const {
  std::vector<Jet> scaled;
  scaled.reserve(omega_.size());
  for (const auto& jet : omega_) scaled.push_back(lambda * jet);
  return PeriodFrame(n_, std::move(scaled));
}

PeriodFrame build_period_frame(const Jet& u, int n) {
  if (u.vars() != n)
    throw DimensionError("prepotential jet dimension does not match n");
  if (u.order() < 1)
    throw DimensionError("prepotential jet order too low for a period frame");

  const int order = u.order() - 1;
  const auto& base = u.base_point();
  const double s = 1.0 / std::sqrt(2.0);

  std::vector<Jet> du;
  du.reserve(n);
  for (int i = 0; i < n; ++i) du.push_back(u.derivative(i));

  std::vector<Jet> omega;
  omega.reserve(2 * n + 2);
  omega.push_back(Jet::constant(base, order, 1.0));
  for (int a = 0; a < n; ++a)
    omega.push_back(s * Jet::variable(base, order, a));

  Jet middle = u.truncated(order);
  for (int a = 0; a < n; ++a)
    middle -= 0.5 * (Jet::variable(base, order, a) * du[a]);
  omega.push_back(middle);

  for (int a = 0; a < n; ++a) omega.push_back(s * du[a]);

  return PeriodFrame(n, std::move(omega));
}

Filtration build_filtration(const PeriodFrame& frame,
                            const std::vector<Complex>& point) {
  const int n = frame.n();
  if (static_cast<int>(point.size()) != n)
    throw DimensionError("point dimension does not match frame");
  for (int i = 0; i < n; ++i)
    if (point[i] != frame.base_point()[i])
      throw DimensionError("filtration point must be the frame base point");
  if (frame.order() < 1)
    throw DimensionError("frame order too low for a filtration");

  Filtration fil;
  fil.n = n;
  fil.F3 = frame.value();

  fil.F2.resize(frame.dim(), n + 1);
  fil.F2.col(0) = frame.value();
  for (int i = 0; i < n; ++i)
    fil.F2.col(i + 1) = frame.derivative(MultiIndex::unit(n, i));

  Eigen::JacobiSVD<Matrix> svd(fil.F2);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-10 * sv(0))
    throw NumericalError("degenerate point: F2 is rank deficient");

  // F1 = kernel of xi -> Q(Omega, xi). The functional is c^T xi with
  // c = Q^T Omega.
  SymplecticForm q(n);
  const Vector c = q.matrix().transpose() * frame.value();
  fil.F1 = kernel_basis(c.transpose());
  if (fil.F1.cols() != 2 * n + 1)
    throw NumericalError("orthocomplement of F3 has unexpected dimension");
  return fil;
}

namespace {

double max_abs_pairing(const SymplecticForm& q, const Matrix& a,
                       const Matrix& b) {
  double worst = 0.0;
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      worst = std::max(worst,
                       std::abs(q.pair(a.col(i), b.col(j))) /
                           (a.col(i).norm() * b.col(j).norm()));
  return worst;
}

// Positivity weight for H^{p,q}. The pairing matrix already carries one
// factor of i, so the positive-definite combination is i^{p-q-1} Q(psi,
// conj(psi)); on H^{3,0} applied to the period vector it equals e^{-K}.
Complex weil_weight(int p, int q) {
  static const Complex table[4] = {Complex(1, 0), Complex(0, 1),
                                   Complex(-1, 0), Complex(0, -1)};
  int e = ((p - q - 1) % 4 + 4) % 4;
  return table[e];
}

}  // namespace

HodgeRiemannReport check_hodge_riemann(const Filtration& fil, double tol) {
  const int n = fil.n;
  SymplecticForm q(n);
  HodgeRiemannReport rep;

  rep.max_q_f3_f1 = max_abs_pairing(q, fil.F3, fil.F1);
  rep.max_q_f2_f2 = max_abs_pairing(q, fil.F2, fil.F2);
  rep.relations_12_3_pass = rep.max_q_f3_f1 <= tol && rep.max_q_f2_f2 <= tol;

  // H^{p,q} = F^p cap conj(F^q) for p + q = 3 (with F^0 the whole space).
  rep.decomposition.pieces[0] = fil.F3;
  rep.decomposition.pieces[1] = subspace_intersection(fil.F2, fil.F1.conjugate());
  rep.decomposition.pieces[2] = subspace_intersection(fil.F1, fil.F2.conjugate());
  rep.decomposition.pieces[3] = fil.F3.conjugate();

  rep.relation_4_pass = true;
  for (int k = 0; k < 4; ++k) {
    const int p = 3 - k;
    const int qq = k;
    rep.decomposition.weil_signs[k] = weil_weight(p, qq) * kI;

    const Matrix& basis = rep.decomposition.pieces[k];
    if (basis.cols() == 0) {
      rep.weil_min[k] = 0.0;
      rep.relation_4_pass = false;
      continue;
    }
    // Gram matrix of the positivity pairing on an orthonormal basis; its
    // smallest eigenvalue is the exact minimum over unit vectors.
    Eigen::HouseholderQR<Matrix> qr(basis);
    const Matrix on =
        qr.householderQ() * Matrix::Identity(basis.rows(), basis.cols());
    Matrix gram(on.cols(), on.cols());
    for (int i = 0; i < on.cols(); ++i)
      for (int j = 0; j < on.cols(); ++j)
        gram(i, j) = weil_weight(p, qq) * q.pair(on.col(i), on.col(j).conjugate());
    const Eigen::VectorXd eig = hermitian_eigenvalues(gram);
    rep.weil_min[k] = eig(0);
    if (eig(0) <= 0.0) {
      rep.relation_4_pass = false;
      Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (gram + gram.adjoint()));
      rep.witness = on * es.eigenvectors().col(0);
    }

    // Conjugation symmetry H^{p,q} = conj(H^{q,p}).
    const Matrix& partner = rep.decomposition.pieces[3 - k];
    if (partner.cols() == basis.cols() && basis.cols() > 0) {
      rep.conjugation_defect =
          std::max(rep.conjugation_defect,
                   projection_residual(partner.conjugate(), basis));
    }
  }
  return rep;
}

HorizontalityReport check_horizontality(const PeriodFrame& frame) {
  if (frame.order() < 2)
    throw DimensionError("horizontality needs frame order >= 2");
  const int n = frame.n();
  const Filtration fil = build_filtration(frame, frame.base_point());

  HorizontalityReport rep;
  Matrix first(frame.dim(), n);
  for (int i = 0; i < n; ++i)
    first.col(i) = frame.derivative(MultiIndex::unit(n, i));
  rep.max_first_residual = projection_residual(fil.F2, first);

  Matrix second(frame.dim(), n * (n + 1) / 2);
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      MultiIndex beta(n);
      beta.set(i, beta[i] + 1);
      beta.set(j, beta[j] + 1);
      second.col(c++) = frame.derivative(beta);
    }
  rep.max_second_residual = projection_residual(fil.F1, second);
  rep.max_residual = std::max(rep.max_first_residual, rep.max_second_residual);
  return rep;
}

}  // namespace wpgeom
