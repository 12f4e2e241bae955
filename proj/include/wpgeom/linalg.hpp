#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "wpgeom/bijet.hpp"
#include "wpgeom/tensor.hpp"

namespace wpgeom {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Orthonormal basis (columns) of the kernel of A, via SVD with a relative
/// rank threshold.
Matrix kernel_basis(const Matrix& a, double rel_tol = 1e-10);

/// Orthonormal basis (columns) of the intersection of two subspaces given by
/// basis columns.
Matrix subspace_intersection(const Matrix& a, const Matrix& b,
                             double rel_tol = 1e-10);

/// Largest residual ||(I - P_S) v|| / ||v|| over the columns v of `vectors`,
/// where P_S projects onto the column span of `basis`.
double projection_residual(const Matrix& basis, const Matrix& vectors);

/// Eigenvalues of a (numerically) Hermitian matrix, ascending. The input is
/// symmetrized first; `defect` (if non-null) receives the Hermitian defect.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m, double* defect = nullptr);

/// 2-norm condition number.
double condition_number(const Matrix& m);

/// Inverse of an n x n matrix of BiJets, exact under truncation. Seeds a
/// Newton iteration X <- X (2I - A X) with the inverse of the value part;
/// each sweep doubles the correct total order.
Tensor<BiJet, 2> bijet_matrix_inverse(const Tensor<BiJet, 2>& a);

}  // namespace wpgeom
