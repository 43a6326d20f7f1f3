#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace arbelo {

/// Tolerance policy shared by every predicate in the library. Absolute
/// length_eps for coordinate comparisons, residual_eps for tangency checks,
/// rel_eps for radius/ratio comparisons. Passed explicitly, no global state.
struct Tolerance {
  double length_eps = 1e-9;
  double residual_eps = 1e-7;
  double rel_eps = 1e-9;
};

struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonFiniteCoordinate : GeometryError { using GeometryError::GeometryError; };
struct CenterInversion : GeometryError { using GeometryError::GeometryError; };
struct DegenerateDiameter : GeometryError { using GeometryError::GeometryError; };
struct LineThroughCenter : GeometryError { using GeometryError::GeometryError; };
struct CenterHasNoPolar : GeometryError { using GeometryError::GeometryError; };
struct FocusOnCurve : GeometryError { using GeometryError::GeometryError; };
struct ConcentricDegenerate : GeometryError { using GeometryError::GeometryError; };
struct InversionNotAtFocus : GeometryError { using GeometryError::GeometryError; };
struct PointInsideOrOn : GeometryError { using GeometryError::GeometryError; };
struct IdenticalCircles : GeometryError { using GeometryError::GeometryError; };
struct LineNotTangent : GeometryError { using GeometryError::GeometryError; };
struct NotInternallyTangent : GeometryError { using GeometryError::GeometryError; };
struct DegenerateFoci : GeometryError { using GeometryError::GeometryError; };
struct FociDiffer : GeometryError { using GeometryError::GeometryError; };
struct IllConditioned : GeometryError { using GeometryError::GeometryError; };
struct NonPositiveRadius : GeometryError { using GeometryError::GeometryError; };

struct Vec {
  double x = 0.0;
  double y = 0.0;

  Vec() = default;
  Vec(double x_, double y_) : x(x_), y(y_) {}

  Vec operator+(Vec v) const { return {x + v.x, y + v.y}; }
  Vec operator-(Vec v) const { return {x - v.x, y - v.y}; }
  Vec operator-() const { return {-x, -y}; }
  Vec operator*(double s) const { return {x * s, y * s}; }
  Vec operator/(double s) const { return {x / s, y / s}; }

  double dot(Vec v) const { return x * v.x + y * v.y; }
  double cross(Vec v) const { return x * v.y - y * v.x; }
  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
  /// Counter-clockwise quarter turn.
  Vec perp() const { return {-y, x}; }
  Vec normalized() const {
    double n = norm();
    if (!(n > 0.0)) throw GeometryError("cannot normalize zero vector");
    return {x / n, y / n};
  }
};

inline Vec operator*(double s, Vec v) { return v * s; }

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw NonFiniteCoordinate("point coordinate is not finite");
  }

  Vec operator-(Point p) const { return {x - p.x, y - p.y}; }
  Point operator+(Vec v) const { return {x + v.x, y + v.y}; }
  Point operator-(Vec v) const { return {x - v.x, y - v.y}; }
};

inline double distance(Point a, Point b) { return (a - b).norm(); }

inline Point midpoint(Point a, Point b) {
  return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
}

/// Oriented line {p : normal . p = offset} in normalized Hessian form.
/// The representation is canonicalized (first nonzero normal component
/// positive) so equal lines compare equal regardless of construction path.
struct Line {
  Vec normal{1.0, 0.0};
  double offset = 0.0;

  Line() = default;
  Line(Vec n, double c) {
    double len = n.norm();
    if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(c))
      throw GeometryError("degenerate line");
    normal = n / len;
    offset = c / len;
    if (normal.x < 0.0 || (normal.x == 0.0 && normal.y < 0.0)) {
      normal = -normal;
      offset = -offset;
    }
  }

  static Line through_points(Point a, Point b) {
    Vec d = b - a;
    if (!(d.norm() > 0.0)) throw GeometryError("line through coincident points");
    Vec n = d.perp();
    return Line(n, n.dot(a - Point{}));
  }

  static Line through_point_with_normal(Point p, Vec n) {
    return Line(n, n.dot(p - Point{}));
  }

  double signed_distance(Point p) const {
    return normal.x * p.x + normal.y * p.y - offset;
  }
  double distance(Point p) const { return std::abs(signed_distance(p)); }
  bool contains(Point p, const Tolerance& tol = {}) const {
    return distance(p) <= tol.length_eps;
  }
  Vec direction() const { return {-normal.y, normal.x}; }
  /// Foot of the perpendicular from the origin.
  Point base_point() const { return Point{} + normal * offset; }
};

inline bool same_line(const Line& a, const Line& b, const Tolerance& tol = {}) {
  return std::abs(a.normal.x - b.normal.x) <= tol.length_eps &&
         std::abs(a.normal.y - b.normal.y) <= tol.length_eps &&
         std::abs(a.offset - b.offset) <= tol.length_eps;
}

struct Circle {
  Point center;
  double radius = 1.0;

  Circle() = default;
  Circle(Point c, double r) : center(c), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw NonPositiveRadius("circle radius must be positive and finite");
  }

  bool contains_on_boundary(Point p, const Tolerance& tol = {}) const {
    return std::abs(distance(p, center) - radius) <= tol.residual_eps;
  }
};

Point project_point_on_line(Point p, const Line& l);

Point invert_point(Point p, const Circle& inv, const Tolerance& tol = {});

Point reflect_point_in_line(Point p, const Line& l);

Circle circle_through_diameter(Point a, Point b, const Tolerance& tol = {});

}  // namespace arbelo
