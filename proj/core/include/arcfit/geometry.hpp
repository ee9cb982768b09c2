#ifndef ARCFIT_GEOMETRY_HPP
#define ARCFIT_GEOMETRY_HPP

#include <cmath>
#include <string>
#include <vector>

#include "arcfit/errors.hpp"

namespace arcfit {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 mirror_x() const { return {x, -y}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

/// Approximation scheme: degree and the geometric continuity it provides
/// at the arc endpoints.
enum class Scheme { G0Quadratic, G1Cubic, G2Quartic };

constexpr int degree(Scheme s) {
  switch (s) {
    case Scheme::G0Quadratic: return 2;
    case Scheme::G1Cubic: return 3;
    case Scheme::G2Quartic: return 4;
  }
  return 0;
}

const char* name(Scheme s);
Scheme scheme_from_name(const std::string& s);

/// Half-circle arcs (c = 0) use a dedicated quartic construction; cosines
/// below this threshold select it.
inline constexpr double kHalfCircleEps = 1e-13;

/// Largest accepted cosine; beyond this the arc degenerates to a point
/// neighbourhood and every bound collapses.
inline constexpr double kMaxCosine = 1.0 - 1e-9;

/// A unit circular arc spanning angles [-phi, phi], phi in (0, pi/2].
/// The cosine c = cos(phi) is stored alongside phi so it can be supplied
/// exactly where a test or a table needs it.
class ArcSpec {
 public:
  static ArcSpec from_angle(double phi);
  static ArcSpec from_cosine(double c);

  double phi() const { return phi_; }
  double c() const { return c_; }
  /// sin(phi) = sqrt(1 - c^2); the y-coordinate of the upper endpoint.
  double s() const { return s_; }

 private:
  ArcSpec(double phi, double c) : phi_(phi), c_(c), s_(std::sqrt((1.0 - c) * (1.0 + c))) {}
  double phi_;
  double c_;
  double s_;
};

/// Control points b_0..b_n of a scheme's approximant, together with the
/// free construction parameter d. Mirror-symmetric over the x-axis by
/// construction: points[j] = mirror_x(points[n-j]).
struct ControlPolygon {
  Scheme scheme = Scheme::G0Quadratic;
  double c = 0.0;
  double d = 0.0;
  std::vector<Vec2> points;
};

/// Bernstein polynomial B_j^n over [-1,1]:
/// C(n,j) ((1+t)/2)^j ((1-t)/2)^(n-j), for 0 <= j <= n <= 4.
double bernstein(int n, int j, double t);

ControlPolygon build_polygon(const ArcSpec& arc, Scheme scheme, double d);

/// Point (order 0) or derivative w.r.t. t (order 1, 2) of the curve.
/// The parameter domain is [-1,1], so each differentiation carries a
/// factor n/2 relative to the difference polygon.
Vec2 curve_eval(const ControlPolygon& p, double t, int order = 0);

/// Signed curvature cross(p', p'') / |p'|^3. Throws SingularityError at
/// irregular points.
double signed_curvature(const ControlPolygon& p, double t);

}  // namespace arcfit

#endif  // ARCFIT_GEOMETRY_HPP
