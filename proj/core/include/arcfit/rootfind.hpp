#ifndef ARCFIT_ROOTFIND_HPP
#define ARCFIT_ROOTFIND_HPP

#include <functional>
#include <optional>

namespace arcfit {

/// Default tolerance for inner (t) solves.
inline constexpr double kInnerTol = 1e-13;
/// Default tolerance for outer (d) solves. Tables are reported to six
/// decimals, which leaves several orders of margin.
inline constexpr double kOuterTol = 1e-12;

/// An interval [lo, hi] with a sign change: f_lo * f_hi <= 0.
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

/// Evaluates f at both ends. Throws BracketError when no sign change.
Bracket make_bracket(const std::function<double(double)>& f, double lo, double hi);

/// Hybrid secant/bisection solve of f(x) = 0 on a bracket. Returns the
/// midpoint of an enclosing interval of width <= tol_x; the bisection
/// fallback guarantees termination within 200 iterations. An optional
/// hint inside the bracket shrinks it before iterating.
double solve_bracketed(const std::function<double(double)>& f, Bracket bracket,
                       double tol_x, std::optional<double> hint = std::nullopt);

/// Solves pos(d) = |neg(d)| on [lo, hi] via solve_bracketed on
/// pos - |neg|. Throws BracketError when the balance does not change
/// sign on the interval.
double solve_balance(const std::function<double(double)>& pos,
                     const std::function<double(double)>& neg, double lo,
                     double hi, double tol_x);

}  // namespace arcfit

#endif  // ARCFIT_ROOTFIND_HPP
