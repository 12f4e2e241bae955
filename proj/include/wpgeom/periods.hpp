#pragma once

#include <array>
#include <vector>

#include "wpgeom/bijet.hpp"
#include "wpgeom/jet.hpp"
#include "wpgeom/linalg.hpp"

namespace wpgeom {

/// The skew pairing on the (2n+2)-dimensional period space, in the basis
/// where it is the block matrix i * [[0, I], [-I, 0]]:
///
///   Q(xi, eta) = i sum_{a=0}^{n} (xi_a eta_{n+1+a} - xi_{n+1+a} eta_a).
class SymplecticForm {
 public:
  explicit SymplecticForm(int n) : n_(n) {}

  int n() const { return n_; }
  int dim() const { return 2 * n_ + 2; }

  Complex pair(const Vector& xi, const Vector& eta) const;

  /// The pairing applied to vectors of jets (bilinear, truncated product).
  Jet pair(const std::vector<Jet>& xi, const std::vector<Jet>& eta) const;

  /// Q(xi(z), conj(eta(z))) as a BiJet of the given shape.
  BiJet pair_sesqui(const std::vector<Jet>& xi, const std::vector<Jet>& eta,
                    BiShape shape) const;

  Matrix matrix() const;

 private:
  int n_;
};

/// The period vector Omega(z) and its expansion at a base point: 2n+2 jets,
/// one per component. Component layout:
///   0        : 1
///   1..n     : z_a / sqrt(2)
///   n+1      : u - (1/2) sum_a z_a u_a
///   n+2..2n+1: u_a / sqrt(2)
class PeriodFrame {
 public:
  PeriodFrame(int n, std::vector<Jet> omega);

  int n() const { return n_; }
  int dim() const { return 2 * n_ + 2; }
  int order() const { return omega_[0].order(); }
  const std::vector<Complex>& base_point() const {
    return omega_[0].base_point();
  }
  const std::vector<Jet>& omega() const { return omega_; }

  /// Omega at the base point.
  Vector value() const;

  /// d^beta Omega at the base point (componentwise derivative values).
  Vector derivative(const MultiIndex& beta) const;

  /// The frame scaled by a nonzero constant (a line-bundle gauge change).
  PeriodFrame scaled(Complex lambda) const;

 private:
  int n_;
  std::vector<Jet> omega_;
};

/// Assembles the period frame from a prepotential jet at the frame's base
/// point. Every component has order (order(u) - 1). Throws DimensionError if
/// the jet order cannot supply that depth.
PeriodFrame build_period_frame(const Jet& u, int n);

/// Hodge flag at a point: F3 (dim 1), F2 (dim n+1), F1 (dim 2n+1), stored as
/// basis columns. F3 subset span(F2) subset span(F1) by construction.
struct Filtration {
  int n = 0;
  Matrix F3;
  Matrix F2;
  Matrix F1;
};

/// F3 = Omega(p); F2 = span(Omega, d_1 Omega, ..., d_n Omega); F1 = the
/// Q-orthocomplement of F3 (kernel of xi -> Q(Omega, xi), rank-revealing).
/// Throws NumericalError if F2 is rank deficient (degenerate point).
Filtration build_filtration(const PeriodFrame& frame,
                            const std::vector<Complex>& point);

/// The four pieces H^{3,0}, H^{2,1}, H^{1,2}, H^{0,3} recovered from a flag
/// via H^{p,q} = F^p cap conj(F^q), with the Weil-operator scalars i^{p-q}.
struct HodgeDecomposition {
  std::array<Matrix, 4> pieces;       // index 0 -> (3,0), ..., 3 -> (0,3)
  std::array<Complex, 4> weil_signs;  // i^{p-q}
  std::array<int, 4> dims() const {
    return {static_cast<int>(pieces[0].cols()),
            static_cast<int>(pieces[1].cols()),
            static_cast<int>(pieces[2].cols()),
            static_cast<int>(pieces[3].cols())};
  }
};

struct HodgeRiemannReport {
  double max_q_f3_f1 = 0.0;  // |Q(F3, F1)| worst pair
  double max_q_f2_f2 = 0.0;  // |Q(F2, F2)| worst pair
  // Minimum of the positivity pairing over unit vectors of each H^{p,q}
  // (exact: smallest eigenvalue of the pairing Gram matrix).
  std::array<double, 4> weil_min{};
  double conjugation_defect = 0.0;  // H^{p,q} vs conj(H^{q,p})
  bool relations_12_3_pass = false;
  bool relation_4_pass = false;
  Vector witness;  // a violating unit vector when relation 4 fails
  HodgeDecomposition decomposition;
};

/// Checks the bilinear relations Q(F3,F1) = 0, Q(F2,F2) = 0 and the Weil
/// positivity on each recovered H^{p,q}.
HodgeRiemannReport check_hodge_riemann(const Filtration& fil,
                                       double tol = 1e-10);

struct HorizontalityReport {
  double max_first_residual = 0.0;   // d_i Omega against span(F2)
  double max_second_residual = 0.0;  // d_i d_j Omega against span(F1)
  double max_residual = 0.0;
};

/// Verifies d_i Omega in span(F2) and d_i d_j Omega in span(F1) by residual
/// norms after projection. Requires frame order >= 2.
HorizontalityReport check_horizontality(const PeriodFrame& frame);

}  // namespace wpgeom
