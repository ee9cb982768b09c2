#ifndef ARCFIT_RADIAL_ERROR_HPP
#define ARCFIT_RADIAL_ERROR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "arcfit/geometry.hpp"

namespace arcfit {

/// Radial distance profile of an approximant: max over t of ||p(t)|| - 1|.
struct RadialProfile {
  double max_abs = 0.0;
  double argmax_t = 0.0;
  /// (t, ||p(t)|| - 1) grid, kept only on request.
  std::vector<std::pair<double, double>> samples;
};

RadialProfile radial_error(const ControlPolygon& p, bool keep_samples = false);

struct RadialOptimum {
  double d_r = 0.0;
  RadialProfile profile;
};

/// Minimizes the radial error over d by golden-section search on
/// [0.5, 1.5] x d*_curvature, preceded by a 101-point scan that selects
/// the basin. d_star_hint skips recomputing the curvature optimum.
RadialOptimum optimal_radial_d(const ArcSpec& arc, Scheme scheme,
                               std::optional<double> d_star_hint = std::nullopt);

}  // namespace arcfit

#endif  // ARCFIT_RADIAL_ERROR_HPP
