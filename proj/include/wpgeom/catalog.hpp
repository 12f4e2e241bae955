#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "wpgeom/prepotential.hpp"

namespace wpgeom {

/// A validated prepotential with its metadata. The normalization
/// u(0) = -i, grad u(0) = 0, hess u(0) = i I is checked at load time
/// (tolerance 1e-12); entries that fail it never enter the pipeline.
struct CatalogEntry {
  std::string name;
  int n = 0;
  Prepotential u{0};
  /// Declared metadata: the sup bound on |F|^2 may be asserted only for
  /// complete slices. Never inferred from samples.
  bool complete = false;
  /// The curvature of this slice is expected parallel (locally symmetric).
  bool parallel_curvature = false;
  /// Conservative sampling radius inside the validity region.
  double radius_bound = 0.0;
};

/// u = -i + (i/2) sum z_a^2, any n >= 1. Complete, locally symmetric.
CatalogEntry make_quadratic(int n);

/// u = -i + (i/2) z^2 + c z^3, n = 1.
CatalogEntry make_cubic(Complex c);

/// The quadratic normal form plus user monomials of degree 3 or 4, n <= 3.
CatalogEntry make_quartic_perturbed(
    int n, const std::vector<std::pair<MultiIndex, Complex>>& extra);

/// Names of the built-in entries, in catalog order.
std::vector<std::string> catalog_names();

/// Builds an entry from a config fragment: either
///   {"catalog": "<name>", "params": {...}}   or
///   {"inline": {"n": 2, "monomials": [[[2,0], [0.0, 0.5]], ...]}}.
/// Complex scalars are [re, im] pairs, monomial keys are exponent arrays.
/// Throws ConfigError for malformed input and NormalizationError (naming the
/// failing condition and its size) for a bad prepotential.
CatalogEntry load_prepotential(const nlohmann::json& source);

/// Checks the normal-form conditions at the origin; throws
/// NormalizationError describing the first violated condition.
void validate_normalization(const Prepotential& u, double tol = 1e-12);

/// Sampling request: either a seeded uniform draw from a complex ball or a
/// rectangular per-axis grid.
struct SampleSpec {
  enum class Mode { kRandom, kGrid };
  Mode mode = Mode::kRandom;

  // random mode
  int count = 20;
  std::uint64_t seed = 12345;
  double radius = 0.0;  // 0: use the entry's radius bound

  // grid mode
  struct Axis {
    double re_min = 0.0, re_max = 0.0;
    int re_count = 1;
    double im_min = 0.0, im_max = 0.0;
    int im_count = 1;
  };
  std::vector<Axis> axes;
};

struct ScanResult {
  std::vector<std::vector<Complex>> accepted;
  struct Rejection {
    std::vector<Complex> z;
    std::string reason;
  };
  std::vector<Rejection> rejected;
};

/// Evaluates e^{-K} and min eig(h) on every grid point; accepts iff
/// e^{-K} > 1e-6 and min eig(h) > 1e-8. Rejections keep their reason.
/// Throws NumericalError if nothing survives.
ScanResult domain_scan(const CatalogEntry& entry, const SampleSpec& spec);

}  // namespace wpgeom
