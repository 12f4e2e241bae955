#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "wpgeom/jet.hpp"
#include "wpgeom/multiindex.hpp"

namespace wpgeom {

/// Truncation shape of a BiJet: coefficients (alpha, beta) are kept iff
/// |alpha| + |beta| <= total, |alpha| <= hol and |beta| <= anti.
/// The admissible set is downward closed, so truncated arithmetic on exact
/// truncations stays exact.
struct BiShape {
  int total;
  int hol;
  int anti;

  bool admits(int hol_deg, int anti_deg) const {
    return hol_deg + anti_deg <= total && hol_deg <= hol && anti_deg <= anti;
  }

  /// Shape after one holomorphic derivative.
  BiShape d() const { return {total - 1, hol - 1, anti}; }
  /// Shape after one anti-holomorphic derivative.
  BiShape dbar() const { return {total - 1, hol, anti - 1}; }

  BiShape intersect(const BiShape& o) const {
    return {std::min(total, o.total), std::min(hol, o.hol),
            std::min(anti, o.anti)};
  }

  friend bool operator==(const BiShape&, const BiShape&) = default;
};

/// Truncated real-analytic expansion in (w, conj w) at a base point p:
///
///   f(p + w) = sum_{alpha,beta} c_{alpha,beta} w^alpha conj(w)^beta
///
/// restricted to a BiShape. This is the carrier for non-holomorphic scalars
/// such as the Kaehler potential, metric coefficients and curvature entries;
/// a holomorphic Jet embeds as the anti-degree-0 slice. All operations are
/// pure and exact under truncation.
class BiJet {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;

  BiJet() : shape_{0, 0, 0} {}

  BiJet(std::vector<Complex> base_point, BiShape shape);

  static BiJet constant(const std::vector<Complex>& base_point, BiShape shape,
                        Complex value);

  /// Embeds a holomorphic jet (anti-degree 0), truncated to `shape`.
  static BiJet from_holomorphic(const Jet& jet, BiShape shape);

  int vars() const { return static_cast<int>(base_.size()); }
  const BiShape& shape() const { return shape_; }
  const std::vector<Complex>& base_point() const { return base_; }

  Complex coeff(const MultiIndex& hol, const MultiIndex& anti) const;
  void set_coeff(const MultiIndex& hol, const MultiIndex& anti, Complex value);

  Complex value() const {
    return coeff(MultiIndex(vars()), MultiIndex(vars()));
  }

  /// Mixed derivative d^alpha dbar^beta f at the base point.
  Complex derivative_value(const MultiIndex& hol,
                           const MultiIndex& anti) const {
    return hol.factorial() * anti.factorial() * coeff(hol, anti);
  }

  /// conj(f): swaps holomorphic and anti-holomorphic indices and conjugates.
  BiJet conjugate() const;

  /// Holomorphic partial d/dw_i.
  BiJet d(int i) const;

  /// Anti-holomorphic partial d/dconj(w_i).
  BiJet dbar(int i) const;

  BiJet truncated(BiShape shape) const;

  /// Max |c - conj(c_swapped)| over all coefficients; zero for the expansion
  /// of a real-valued function.
  double hermitian_defect() const;

  const std::map<Key, Complex>& coeffs() const { return coeffs_; }

  BiJet operator-() const;
  BiJet& operator+=(const BiJet& other);
  BiJet& operator-=(const BiJet& other);

  friend BiJet operator+(BiJet a, const BiJet& b) { return a += b; }
  friend BiJet operator-(BiJet a, const BiJet& b) { return a -= b; }
  friend BiJet operator*(const BiJet& a, const BiJet& b);
  friend BiJet operator*(Complex s, BiJet a);
  friend BiJet operator*(BiJet a, Complex s) { return s * a; }
  friend BiJet operator+(BiJet a, Complex s);
  friend BiJet operator+(Complex s, BiJet a) { return a + s; }
  friend BiJet operator-(BiJet a, Complex s) { return a + (-s); }
  friend BiJet operator-(Complex s, const BiJet& a) { return -a + s; }

 private:
  void check_compatible(const BiJet& other) const;

  std::vector<Complex> base_;
  BiShape shape_;
  std::map<Key, Complex> coeffs_;
};

BiJet reciprocal(const BiJet& a);
BiJet log(const BiJet& a);

}  // namespace wpgeom
