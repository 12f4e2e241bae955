#include "wpgeom/catalog.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

#include "wpgeom/errors.hpp"
#include "wpgeom/geometry.hpp"
#include "wpgeom/periods.hpp"
#include "wpgeom/rng.hpp"

namespace wpgeom {

namespace {
const Complex kI(0.0, 1.0);
}

CatalogEntry make_quadratic(int n) {
  if (n < 1) throw ConfigError("quadratic entry needs n >= 1");
  CatalogEntry e;
  e.name = "quadratic";
  e.n = n;
  e.u = Prepotential(n);
  e.u.add_monomial(MultiIndex(n), -kI);
  for (int a = 0; a < n; ++a) {
    MultiIndex sq(n);
    sq.set(a, 2);
    e.u.add_monomial(sq, 0.5 * kI);
  }
  e.complete = true;
  e.parallel_curvature = true;
  e.radius_bound = 1.2;  // inside |z|^2 < 2
  validate_normalization(e.u);
  return e;
}

CatalogEntry make_cubic(Complex c) {
  CatalogEntry e;
  e.name = "cubic";
  e.n = 1;
  e.u = Prepotential(1);
  e.u.add_monomial(MultiIndex{0}, -kI);
  e.u.add_monomial(MultiIndex{2}, 0.5 * kI);
  e.u.add_monomial(MultiIndex{3}, c);
  e.complete = false;
  e.parallel_curvature = false;
  // e^{-K} = 2 - |z|^2 + cubic corrections bounded by 4|c||z|^3.
  e.radius_bound = std::abs(c) <= 0.12 ? 0.9 : 0.6;
  validate_normalization(e.u);
  return e;
}

CatalogEntry make_quartic_perturbed(
    int n, const std::vector<std::pair<MultiIndex, Complex>>& extra) {
  if (n < 1 || n > 3)
    throw ConfigError("quartic-perturbed entry needs 1 <= n <= 3");
  CatalogEntry e = make_quadratic(n);
  e.name = "quartic-perturbed";
  e.complete = false;
  e.parallel_curvature = false;
  e.radius_bound = 0.7;
  for (const auto& [exps, c] : extra) {
    const int d = exps.degree();
    if (d < 3 || d > 4)
      throw ConfigError("quartic-perturbed accepts monomials of degree 3 or 4");
    e.u.add_monomial(exps, c);
  }
  validate_normalization(e.u);
  return e;
}

std::vector<std::string> catalog_names() {
  return {"quadratic", "cubic", "quartic-perturbed"};
}

void validate_normalization(const Prepotential& u, double tol) {
  const int n = u.dimension();
  const std::vector<Complex> origin(n, Complex(0.0, 0.0));
  const Jet j = jet_from_polynomial(u, origin, 2);

  const double v0 = std::abs(j.value() + kI);
  if (v0 > tol) {
    std::ostringstream os;
    os << "normalization failure: u(0) differs from -i by " << v0;
    throw NormalizationError(os.str());
  }
  for (int a = 0; a < n; ++a) {
    const double v1 = std::abs(j.coeff(MultiIndex::unit(n, a)));
    if (v1 > tol) {
      std::ostringstream os;
      os << "normalization failure: d_" << a + 1 << " u(0) differs from 0 by "
         << v1;
      throw NormalizationError(os.str());
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      MultiIndex m(n);
      m.set(a, m[a] + 1);
      m.set(b, m[b] + 1);
      const Complex hess = j.derivative_value(m);
      const Complex want = (a == b) ? kI : Complex(0.0, 0.0);
      const double v2 = std::abs(hess - want);
      if (v2 > tol) {
        std::ostringstream os;
        os << "normalization failure: d_" << a + 1 << " d_" << b + 1
           << " u(0) differs from " << (a == b ? "i" : "0") << " by " << v2;
        throw NormalizationError(os.str());
      }
    }
}

namespace {

Complex json_complex(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError(where + ": expected a [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

CatalogEntry load_prepotential(const nlohmann::json& source) {
  if (source.contains("catalog")) {
    const std::string name = source["catalog"].get<std::string>();
    const nlohmann::json params =
        source.value("params", nlohmann::json::object());
    if (name == "quadratic") {
      return make_quadratic(params.value("n", 1));
    }
    if (name == "cubic") {
      Complex c(0.1, 0.0);
      if (params.contains("c")) c = json_complex(params["c"], "entry.params.c");
      return make_cubic(c);
    }
    if (name == "quartic-perturbed") {
      const int n = params.value("n", 2);
      std::vector<std::pair<MultiIndex, Complex>> extra;
      if (params.contains("monomials")) {
        for (std::size_t t = 0; t < params["monomials"].size(); ++t) {
          const auto& m = params["monomials"][t];
          if (!m.is_array() || m.size() != 2)
            throw ConfigError("entry.params.monomials: expected [exponents, coefficient] pairs");
          MultiIndex exps(n);
          for (int a = 0; a < n; ++a) exps.set(a, m[0][a].get<int>());
          extra.emplace_back(exps,
                             json_complex(m[1], "entry.params.monomials"));
        }
      } else {
        // default perturbation: one cubic and one quartic monomial
        MultiIndex cubic(n), quartic(n);
        cubic.set(0, 3);
        quartic.set(0, n > 1 ? 2 : 4);
        if (n > 1) quartic.set(1, 2);
        extra.emplace_back(cubic, Complex(0.05, 0.0));
        extra.emplace_back(quartic, Complex(0.0, 0.03));
      }
      return make_quartic_perturbed(n, extra);
    }
    throw ConfigError("entry.catalog: unknown catalog name '" + name + "'");
  }
  if (source.contains("inline")) {
    const auto& inl = source["inline"];
    if (!inl.contains("n")) throw ConfigError("entry.inline.n: missing");
    const int n = inl["n"].get<int>();
    Prepotential u(n);
    if (!inl.contains("monomials"))
      throw ConfigError("entry.inline.monomials: missing");
    for (const auto& m : inl["monomials"]) {
      if (!m.is_array() || m.size() != 2)
        throw ConfigError("entry.inline.monomials: expected [exponents, coefficient] pairs");
      MultiIndex exps(n);
      for (int a = 0; a < n; ++a) exps.set(a, m[0][a].get<int>());
      u.add_monomial(exps, json_complex(m[1], "entry.inline.monomials"));
    }
    validate_normalization(u);
    CatalogEntry e;
    e.name = inl.value("name", std::string("inline"));
    e.n = n;
    e.u = u;
    e.complete = false;
    e.parallel_curvature = false;
    e.radius_bound = inl.value("radius", 0.5);
    return e;
  }
  throw ConfigError("entry: needs either 'catalog' or 'inline'");
}

namespace {

std::vector<std::vector<Complex>> sample_points(const CatalogEntry& entry,
                                                const SampleSpec& spec) {
  std::vector<std::vector<Complex>> pts;
  if (spec.mode == SampleSpec::Mode::kRandom) {
    const double radius =
        spec.radius > 0.0 ? spec.radius : entry.radius_bound;
    GaussianRng rng(spec.seed);
    for (int t = 0; t < spec.count; ++t) {
      // uniform in the complex ball: gaussian direction, radial cdf inverse
      std::vector<Complex> z(entry.n);
      double norm2 = 0.0;
      for (int a = 0; a < entry.n; ++a) {
        z[a] = Complex(rng.gauss(), rng.gauss());
        norm2 += std::norm(z[a]);
      }
      const double u = rng.uniform();
      const double scale =
          radius * std::pow(u, 1.0 / (2.0 * entry.n)) / std::sqrt(norm2);
      for (auto& c : z) c *= scale;
      pts.push_back(std::move(z));
    }
  } else {
    if (static_cast<int>(spec.axes.size()) != entry.n)
      throw ConfigError("samples.axes: need one axis spec per variable");
    std::vector<std::vector<Complex>> axis_values(entry.n);
    for (int a = 0; a < entry.n; ++a) {
      const auto& ax = spec.axes[a];
      for (int ir = 0; ir < ax.re_count; ++ir)
        for (int ii = 0; ii < ax.im_count; ++ii) {
          const double re =
              ax.re_count == 1
                  ? ax.re_min
                  : ax.re_min + (ax.re_max - ax.re_min) * ir / (ax.re_count - 1);
          const double im =
              ax.im_count == 1
                  ? ax.im_min
                  : ax.im_min + (ax.im_max - ax.im_min) * ii / (ax.im_count - 1);
          axis_values[a].emplace_back(re, im);
        }
    }
    std::vector<std::size_t> idx(entry.n, 0);
    while (true) {
      std::vector<Complex> z(entry.n);
      for (int a = 0; a < entry.n; ++a) z[a] = axis_values[a][idx[a]];
      pts.push_back(std::move(z));
      int a = 0;
      while (a < entry.n && ++idx[a] == axis_values[a].size()) idx[a++] = 0;
      if (a == entry.n) break;
    }
  }
  return pts;
}

}  // namespace

ScanResult domain_scan(const CatalogEntry& entry, const SampleSpec& spec) {
  ScanResult result;
  for (auto& z : sample_points(entry, spec)) {
    try {
      // metric-only depth is enough for the acceptance test
      const Jet uj = jet_from_polynomial(entry.u, z, 3);
      const PeriodFrame frame = build_period_frame(uj, entry.n);

      SymplecticForm q(entry.n);
      const BiJet e = -1.0 * q.pair_sesqui(frame.omega(), frame.omega(),
                                           BiShape{2, 1, 1});
      const double ek = e.value().real();
      if (ek <= 0.0) {
        result.rejected.push_back({z, "e^-K <= 0 (outside validity region)"});
        continue;
      }
      if (ek <= 1e-6) {
        result.rejected.push_back({z, "e^-K below the 1e-6 threshold"});
        continue;
      }
      const MetricBundle b = kahler_potential_and_metric(frame, z);
      const Eigen::VectorXd eig = hermitian_eigenvalues(b.h0);
      if (eig(0) <= 1e-8) {
        result.rejected.push_back({z, "metric not positive definite"});
        continue;
      }
      result.accepted.push_back(std::move(z));
    } catch (const NumericalError& err) {
      result.rejected.push_back({z, err.what()});
    }
  }
  if (result.accepted.empty())
    throw NumericalError(
        "domain scan rejected every sample point; widen or move the grid");
  return result;
}

}  // namespace wpgeom
