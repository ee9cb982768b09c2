#ifndef ARCFIT_OPTIMIZER_HPP
#define ARCFIT_OPTIMIZER_HPP

#include <optional>
#include <utility>

#include "arcfit/curvature_error.hpp"
#include "arcfit/geometry.hpp"
#include "arcfit/rootfind.hpp"

namespace arcfit {

/// Which algorithmic path produced the optimal parameter.
enum class Branch {
  /// d* = d_e(c): the designated extrema already balance.
  Equioscillating,
  /// d* balances the two boundary-adjacent extrema (quadratic case 2).
  BoundaryBalanced,
  /// d* balances an interior extremum against its counterpart
  /// (cubic/quartic case 2).
  InteriorBalanced,
  /// Half circle quartic: d* solves the two-equation system that
  /// equalizes the midpoint and interior minima.
  HalfCircleSystem,
};

const char* name(Branch b);

struct OptimalResult {
  Scheme scheme = Scheme::G0Quadratic;
  double c = 0.0;
  double d_star = 0.0;
  Branch branch = Branch::Equioscillating;
  ExtremaProfile profile;
  double max_error = 0.0;
  /// The candidate at which the designated error values coincide.
  double d_e = 0.0;
  /// Bracketing interval that contained the solve.
  std::pair<double, double> bounds{0.0, 0.0};
};

struct SolverOptions {
  double outer_tol = kOuterTol;
  /// Forces the case-2 balancing solve on the given d-interval instead
  /// of the theorem's bracket; meant for solver debugging.
  std::optional<std::pair<double, double>> bracket_override;

  /// Inner (t) solves stay at least 10x tighter than the outer solve.
  double inner_tol() const {
    double t = outer_tol / 10.0;
    return t < kInnerTol ? t : kInnerTol;
  }
};

/// d_e(c) = c + (sqrt(2)/2) sqrt(1-c^2), the quadratic candidate.
double d_e_g0(double c);

/// Threshold of the quadratic theorem, (sqrt(6)/36) sqrt(181-12 sqrt(6)).
double g0_threshold();

/// The unique d with e3(0,d) = e3(1,d), via the cube-root closed form
/// with a bisection fallback when the residual exceeds 1e-12.
double d_e_g1(double c);

/// Series bounds d1(c) <= d_e(c), d*(c) <= d2(c) for the cubic scheme.
std::pair<double, double> bounds_g1(double c);

struct BoundsG2 {
  double d0;
  double d1;
  double d2;
  double d3;
};

/// Rational bounds for the quartic scheme; the chain
/// d0 < c/2 < d1 < d2 < d3 < 3/(2c) is asserted.
BoundsG2 bounds_g2(double c);

OptimalResult optimal_g0(double c, const SolverOptions& opts = {});
OptimalResult optimal_g1(double c, const SolverOptions& opts = {});
OptimalResult optimal_g2(double c, const SolverOptions& opts = {});
OptimalResult optimal(Scheme scheme, double c, const SolverOptions& opts = {});

struct TransitionConstants {
  double g0;  // closed form
  double g1;  // numeric: boundary value meets the interior minimum
  double g2;  // numeric: triple equality of the quartic extrema
};

/// The c above which each scheme leaves the d_e branch.
TransitionConstants transition_constants();

}  // namespace arcfit

#endif  // ARCFIT_OPTIMIZER_HPP
