#ifndef ARCFIT_CURVATURE_ERROR_HPP
#define ARCFIT_CURVATURE_ERROR_HPP

#include <utility>
#include <vector>

#include "arcfit/geometry.hpp"
#include "arcfit/rootfind.hpp"

namespace arcfit {

/// Signed curvature error e_n(t,d) = 1 + sign * f(t,d) / g(t,d)^(3/2)
/// for fixed (c,d). f and g are kept separate because the derivative
/// sign tests are phrased in the combination f_t*g - (3/2)*f*g_t, which
/// avoids cancellation near the extrema.
class ErrorFunction {
 public:
  ErrorFunction(Scheme scheme, double c, double d);

  Scheme scheme() const { return scheme_; }
  double c() const { return c_; }
  double d() const { return d_; }
  /// +1 for the quadratic and cubic forms, -1 for the quartic.
  int sign() const { return sign_; }

  double f(double t) const;
  double g(double t) const;
  double df_dt(double t) const;
  double dg_dt(double t) const;

  /// e_n(t,d). Throws RegularityError when g(t,d) <= 0.
  double value(double t) const;

  /// sign * (f_t*g - (3/2)*f*g_t): same zeros and sign as d(e_n)/dt.
  double deriv_num(double t) const;

  /// (e(0,d), e(1,d)) through the rational closed forms.
  std::pair<double, double> boundary() const;

 private:
  Scheme scheme_;
  double c_;
  double d_;
  int sign_;
  bool half_circle_;
};

enum class ExtremumKind { Min, Max, Boundary };

const char* name(ExtremumKind k);

struct Extremum {
  double t;
  double value;
  ExtremumKind kind;
};

/// Extrema of e_n(.,d) on [0,1]; by symmetry each interior entry with
/// t > 0 represents a mirrored pair. Entries are sorted by t.
struct ExtremaProfile {
  std::vector<Extremum> entries;
  double max_abs = 0.0;
  /// True when the lemma-backed bracketing did not apply and a grid scan
  /// with local refinement was used instead.
  bool fallback_scan = false;
};

double eval_error(Scheme scheme, double c, double d, double t);
std::pair<double, double> boundary_values(Scheme scheme, double c, double d);

/// Locates all extrema of e_n(.,d) on [0,1]. Inside the bracketing
/// interval of the respective scheme the lemma structure is used
/// (radical initial guess, sign-pattern brackets); outside it a
/// 2048-point grid scan with local refinement takes over.
ExtremaProfile locate_extrema(Scheme scheme, double c, double d,
                              double tol_t = kInnerTol);

}  // namespace arcfit

#endif  // ARCFIT_CURVATURE_ERROR_HPP
