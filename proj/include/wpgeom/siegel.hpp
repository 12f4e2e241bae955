#pragma once

#include "wpgeom/catalog.hpp"
#include "wpgeom/linalg.hpp"

namespace wpgeom {

/// A point of the Siegel space H_{n+1}: a symmetric (n+1) x (n+1) complex
/// matrix tau = X + iY with Y positive definite at interior points.
struct SiegelPoint {
  Matrix tau;
  Eigen::MatrixXd x;  // Re tau
  Eigen::MatrixXd y;  // Im tau
  double symmetry_defect = 0.0;   // max |tau - tau^T|
  double min_im_eigenvalue = 0.0; // min eig(Y); <= 0 means out of domain
};

/// Period-matrix embedding of the locally symmetric slice into H_{n+1}.
///
/// The plane spanned by the period vector together with the conjugated
/// covariant derivatives conj(d_a Omega + K_a Omega) is isotropic for the
/// pairing; writing its basis as columns [A; B] (upper and lower component
/// halves), tau = sigma B A^{-1} with one global sign sigma fixed so that
/// Im tau is positive definite at z = 0.
///
/// Requires the quadratic catalog entry (the only entry whose image is a
/// complete submanifold). Throws NumericalError when A is singular.
SiegelPoint siegel_embed(const std::vector<Complex>& point,
                         const CatalogEntry& entry);

/// The global orientation sign used by siegel_embed (computed at z = 0,
/// entry-independent; recorded in reports).
int siegel_sign();

}  // namespace wpgeom
