#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wpgeom/jet.hpp"

namespace wpgeom {

/// Central-difference jet of a holomorphic function, with one Richardson
/// extrapolation level. This is the independent oracle the analytic jets are
/// validated against; it never shares code with the jet arithmetic.
///
/// Mixed partials d^beta are tensor products of per-variable central
/// difference stencils, stepped along the real axis of each variable (for a
/// holomorphic evaluator the derivative is direction independent). The
/// evaluator must be defined on a polydisc of radius >= order * step around
/// the point.
///
/// A step below 1e-5 is accepted but flagged through `warning` (severe
/// cancellation at double precision).
Jet finite_difference_jet(
    const std::function<Complex(const std::vector<Complex>&)>& evaluator,
    const std::vector<Complex>& point, int order, double step = 1e-3,
    std::string* warning = nullptr);

}  // namespace wpgeom
