#include "wpgeom/linalg.hpp"

#include "wpgeom/errors.hpp"

namespace wpgeom {

Matrix kernel_basis(const Matrix& a, double rel_tol) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() ? sv(0) : 0.0) * rel_tol;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

Matrix subspace_intersection(const Matrix& a, const Matrix& b,
                             double rel_tol) {
  // x in span(a) cap span(b)  <=>  x = a u = b v; stack [a, -b] and read the
  // kernel.
  Matrix stacked(a.rows(), a.cols() + b.cols());
  stacked << a, -b;
  const Matrix null = kernel_basis(stacked, rel_tol);
  Matrix inter(a.rows(), null.cols());
  for (int c = 0; c < null.cols(); ++c)
    inter.col(c) = a * null.col(c).head(a.cols());
  // Orthonormalize (the kernel may map to dependent vectors only when the
  // intersection dimension was overestimated; QR keeps it tidy).
  if (inter.cols() == 0) return inter;
  Eigen::HouseholderQR<Matrix> qr(inter);
  Matrix q = qr.householderQ() * Matrix::Identity(inter.rows(), inter.cols());
  return q;
}

double projection_residual(const Matrix& basis, const Matrix& vectors) {
  Eigen::HouseholderQR<Matrix> qr(basis);
  const Matrix q =
      qr.householderQ() * Matrix::Identity(basis.rows(), basis.cols());
  double worst = 0.0;
  for (int c = 0; c < vectors.cols(); ++c) {
    const Vector v = vectors.col(c);
    const double norm = v.norm();
    if (norm == 0.0) continue;
    const Vector res = v - q * (q.adjoint() * v);
    worst = std::max(worst, res.norm() / norm);
  }
  return worst;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m, double* defect) {
  const Matrix sym = 0.5 * (m + m.adjoint());
  if (defect) *defect = (m - m.adjoint()).cwiseAbs().maxCoeff() * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success)
    throw NumericalError("hermitian eigensolve failed");
  return es.eigenvalues();
}

double condition_number(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) == 0.0)
    return std::numeric_limits<double>::infinity();
  return sv(0) / sv(sv.size() - 1);
}

Tensor<BiJet, 2> bijet_matrix_inverse(const Tensor<BiJet, 2>& a) {
  const int n = a.extent();
  const BiShape shape = a(0, 0).shape();
  const auto& base = a(0, 0).base_point();

  Matrix value(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) value(i, j) = a(i, j).value();
  const Matrix value_inv = value.inverse();

  Tensor<BiJet, 2> x(n, BiJet(base, shape));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      x(i, j) = BiJet::constant(base, shape, value_inv(i, j));

  const int sweeps_needed = shape.total + 1;
  for (int correct = 1; correct < sweeps_needed; correct *= 2) {
    // X <- X + X (I - A X)
    Tensor<BiJet, 2> ax(n, BiJet(base, shape));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BiJet acc = BiJet(base, shape);
        for (int k = 0; k < n; ++k) acc += a(i, k) * x(k, j);
        if (i == j) acc -= BiJet::constant(base, shape, 1.0);
        ax(i, j) = acc;
      }
    Tensor<BiJet, 2> next(n, BiJet(base, shape));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BiJet acc = x(i, j);
        for (int k = 0; k < n; ++k) acc -= x(i, k) * ax(k, j);
        next(i, j) = acc;
      }
    x = next;
  }
  return x;
}

}  // namespace wpgeom
