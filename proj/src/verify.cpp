#include "wpgeom/verify.hpp"

#include <cmath>

#include "wpgeom/errors.hpp"
#include "wpgeom/rng.hpp"

namespace wpgeom {

double ClaimReport::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& p : points) m = std::min(m, p.margin);
  return m;
}

double hodge_alpha(int n) {
  const double s = std::sqrt(static_cast<double>(n)) + 1.0;
  return 1.0 / (s * s + 1.0);
}

double yukawa_sup_bound(int n) {
  return std::sqrt(n * (n + 3.0) / 3.0);
}

double max_principle_bound(double c1, double c2, double c3, double alpha) {
  if (c1 <= 0.0) throw NumericalError("max_principle_bound requires c1 > 0");
  if (c2 < 0.0 || c3 < 0.0)
    throw NumericalError("max_principle_bound requires c2, c3 >= 0");
  if (alpha <= 1.0) throw NumericalError("max_principle_bound requires alpha > 1");
  return std::max(1.0, std::pow((c2 + c3) / c1, 1.0 / alpha));
}

PointContext make_point_context(const Prepotential& u,
                                const std::vector<Complex>& z, int order) {
  Jet uj = jet_from_polynomial(u, z, order);
  PeriodFrame frame = build_period_frame(uj, u.dimension());
  MetricBundle bundle = build_bundle(frame, z);
  return PointContext{z, std::move(frame), std::move(bundle)};
}

std::vector<PointContext> make_point_contexts(
    const Prepotential& u, const std::vector<std::vector<Complex>>& points,
    int order) {
  std::vector<PointContext> out;
  out.reserve(points.size());
  for (const auto& z : points) out.push_back(make_point_context(u, z, order));
  return out;
}

namespace {

// Deterministic per-(suite, point) stream of unit tangent directions,
// expressed in an h-orthonormal frame so direction statistics do not depend
// on the coordinate scaling.
class DirectionSampler {
 public:
  DirectionSampler(std::uint64_t seed, std::uint64_t salt, std::size_t point_idx,
                   const Matrix& h0)
      : rng_(seed + 0x9E3779B97F4A7C15ull * (point_idx + 1) + salt),
        frame_(h_orthonormal_frame(h0)) {}

  Vector unit() {
    const int n = frame_.cols();
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(rng_.gauss(), rng_.gauss());
    v.normalize();
    return frame_ * v;
  }

 private:
  static Matrix h_orthonormal_frame(const Matrix& h0) {
    const int n = h0.rows();
    auto inner = [&](const Vector& x, const Vector& y) {
      Complex acc(0.0, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += h0(i, j) * x(i) * std::conj(y(j));
      return acc;
    };
    Matrix e = Matrix::Identity(n, n);
    for (int c = 0; c < n; ++c) {
      Vector v = e.col(c);
      for (int prev = 0; prev < c; ++prev)
        v -= inner(v, e.col(prev)) * e.col(prev);
      e.col(c) = v / std::sqrt(inner(v, v).real());
    }
    return e;
  }

  GaussianRng rng_;
  Matrix frame_;
};

ClaimReport make_claim(std::string suite, std::string claim, std::string anchor,
                       double tol, bool asserted = true) {
  ClaimReport r;
  r.suite = std::move(suite);
  r.claim = std::move(claim);
  r.paper_anchor = std::move(anchor);
  r.tolerance = tol;
  r.asserted = asserted;
  return r;
}

}  // namespace

std::vector<ClaimReport> verify_theorem12(const std::vector<PointContext>& pts,
                                          const VerifyOptions& opt) {
  ClaimReport pos = make_claim("theorem12", "hodge-metric-positive",
                               "hodge-metric:definite", opt.tol_inequality);
  ClaimReport bis = make_claim("theorem12", "hodge-bisectional-nonpositive",
                               "hodge-metric:bisectional", opt.tol_inequality);
  ClaimReport ric = make_claim("theorem12", "hodge-ricci-upper-bound",
                               "hodge-metric:ricci", opt.tol_inequality);
  ClaimReport sec = make_claim("theorem12", "hodge-sectional-upper-bound",
                               "hodge-metric:sectional", opt.tol_inequality);

  for (std::size_t idx = 0; idx < pts.size(); ++idx) {
    const auto& ctx = pts[idx];
    const int n = ctx.bundle.n;
    const double alpha = hodge_alpha(n);

    const Eigen::VectorXd hh_eig = hermitian_eigenvalues(ctx.bundle.hh0);
    pos.points.push_back({ctx.z, hh_eig(0)});

    const HodgeCurvature hc = hodge_curvature(ctx.bundle);

    const RicciTensor ric_h = ricci_from_curvature(hc.r, hc.hh_upper);
    const Matrix gap = ric_h.ric + alpha * ctx.bundle.hh0;
    const Eigen::VectorXd gap_eig = hermitian_eigenvalues(gap);
    ric.points.push_back({ctx.z, -gap_eig(gap_eig.size() - 1)});

    DirectionSampler sampler(opt.seed, /*salt=*/0x7412, idx, ctx.bundle.h0);
    double worst_bis = -std::numeric_limits<double>::infinity();
    double worst_sec = -std::numeric_limits<double>::infinity();
    for (int d = 0; d < opt.directions; ++d) {
      const Vector xi = sampler.unit();
      const Vector eta = sampler.unit();
      const SectionalValues sv =
          sectional_evaluators(hc.r, ctx.bundle.hh0, xi, eta);
      worst_bis = std::max(worst_bis, sv.bisectional);
      worst_sec = std::max(worst_sec, sv.holomorphic_sectional + alpha);
    }
    bis.points.push_back({ctx.z, -worst_bis});
    sec.points.push_back({ctx.z, -worst_sec});
  }

  std::vector<ClaimReport> out{pos, bis, ric, sec};
  for (auto& r : out) r.finalize();
  return out;
}

std::vector<ClaimReport> verify_yukawa_estimates(
    const std::vector<PointContext>& pts, bool assert_sup_bound,
    const VerifyOptions& opt) {
  ClaimReport lap = make_claim("yukawa-estimates", "laplacian-chain",
                               "yukawa-norm:laplacian", opt.tol_inequality);
  ClaimReport grad = make_claim("yukawa-estimates", "gradient-bound",
                                "yukawa-norm:gradient", opt.tol_inequality);
  ClaimReport sup = make_claim("yukawa-estimates", "sup-bound",
                               "yukawa-norm:sup", opt.tol_inequality,
                               assert_sup_bound);

  for (const auto& ctx : pts) {
    const int n = ctx.bundle.n;
    const YukawaJet y = covariant_derivative_yukawa(ctx.bundle);
    const double laplacian = complex_laplacian(y.f0_jet, ctx.bundle);
    lap.points.push_back(
        {ctx.z, laplacian - (3.0 / n) * y.f0 * y.f0 + (n + 3.0) * y.f0});

    const double grad_norm = gradient_norm(y.f0_jet, ctx.bundle);
    grad.points.push_back({ctx.z, 2.0 * std::sqrt(y.f1 * y.f0) - grad_norm});

    sup.points.push_back({ctx.z, yukawa_sup_bound(n) - y.f0});
  }

  std::vector<ClaimReport> out{lap, grad, sup};
  for (auto& r : out) r.finalize();
  return out;
}

ClaimReport cross_check_ricci(const std::vector<PointContext>& pts,
                              const VerifyOptions& opt) {
  ClaimReport rep = make_claim("ricci-crosscheck", "ricci-identity",
                               "ricci:identity", opt.tol_identity);
  for (const auto& ctx : pts) {
    const auto& b = ctx.bundle;
    const int n = b.n;
    const double e2k = 1.0 / (b.e_neg_k_value * b.e_neg_k_value);

    const RicciTensor ric =
        ricci_from_curvature(wp_curvature_generic(b), b.h0_upper);

    double resid = 0.0;
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i) {
        Complex ff(0.0, 0.0);
        for (int m = 0; m < n; ++m)
          for (int p = 0; p < n; ++p)
            for (int nn = 0; nn < n; ++nn)
              for (int q = 0; q < n; ++q)
                ff += b.h0_upper(m, p) * b.h0_upper(nn, q) * b.f0(a, m, nn) *
                      std::conj(b.f0(i, p, q));
        const Complex lhs = ric.ric(a, i) + (n + 1.0) * b.h0(a, i) - e2k * ff;
        resid = std::max(resid, std::abs(lhs));
      }
    rep.points.push_back({ctx.z, -resid});
  }
  rep.finalize();
  return rep;
}

ClaimReport verify_cross_engine(const std::vector<PointContext>& pts,
                                const VerifyOptions& opt) {
  ClaimReport rep = make_claim("curvature-crossengine", "engine-agreement",
                               "curvature:cross-engine", opt.tol_identity);
  for (const auto& ctx : pts) {
    const CurvatureTensor generic = wp_curvature_generic(ctx.bundle);
    const CurvatureTensor closed = strominger_curvature(ctx.bundle);
    double worst = 0.0;
    for (std::size_t t = 0; t < generic.r.flat().size(); ++t)
      worst = std::max(worst,
                       std::abs(generic.r.flat()[t] - closed.r.flat()[t]));
    rep.points.push_back({ctx.z, -worst});
  }
  rep.finalize();
  return rep;
}

ClaimReport verify_parallel_curvature(const std::vector<PointContext>& pts,
                                      bool asserted, const VerifyOptions& opt) {
  ClaimReport rep = make_claim("parallel-curvature", "curvature-parallel",
                               "curvature:parallel", opt.tol_identity, asserted);
  for (const auto& ctx : pts) {
    const Tensor<BiJet, 4> r_jets =
        kahler_curvature_generic_jets(ctx.bundle.h, ctx.bundle.h_upper);
    const CurvatureGradient grad =
        covariant_derivative_curvature(r_jets, ctx.bundle.gamma);
    rep.points.push_back({ctx.z, -grad.max_abs});
  }
  rep.finalize();
  return rep;
}

std::vector<ClaimReport> verify_hodge_riemann_suite(
    const std::vector<PointContext>& pts, const VerifyOptions& opt) {
  ClaimReport r3 = make_claim("hodge-riemann", "bilinear-relations",
                              "flag:bilinear", opt.tol_exact);
  ClaimReport r4 = make_claim("hodge-riemann", "weil-positivity",
                              "flag:positivity", opt.tol_exact);
  for (const auto& ctx : pts) {
    const Filtration fil = build_filtration(ctx.frame, ctx.z);
    const HodgeRiemannReport rep = check_hodge_riemann(fil, opt.tol_exact);
    r3.points.push_back(
        {ctx.z, -std::max(rep.max_q_f3_f1, rep.max_q_f2_f2)});
    double min_weil = std::numeric_limits<double>::infinity();
    for (double w : rep.weil_min) min_weil = std::min(min_weil, w);
    r4.points.push_back({ctx.z, min_weil});
  }
  r3.finalize();
  r4.finalize();
  return {r3, r4};
}

ClaimReport verify_horizontality_suite(const std::vector<PointContext>& pts,
                                       const VerifyOptions& opt) {
  ClaimReport rep = make_claim("horizontality", "second-derivatives-in-f1",
                               "flag:horizontal", opt.tol_exact);
  for (const auto& ctx : pts) {
    const HorizontalityReport h = check_horizontality(ctx.frame);
    rep.points.push_back({ctx.z, -h.max_residual});
  }
  rep.finalize();
  return rep;
}

}  // namespace wpgeom
