#include "arbelo/geom.hpp"

namespace arbelo {

Point project_point_on_line(Point p, const Line& l) {
  double s = l.signed_distance(p);
  return p - l.normal * s;
}

Point invert_point(Point p, const Circle& inv, const Tolerance& tol) {
  Vec v = p - inv.center;
  double d2 = v.norm2();
  if (d2 <= tol.length_eps * tol.length_eps)
    throw CenterInversion("cannot invert the center of the inversion circle");
  return inv.center + v * (inv.radius * inv.radius / d2);
}

Point reflect_point_in_line(Point p, const Line& l) {
  double s = l.signed_distance(p);
  return p - l.normal * (2.0 * s);
}

Circle circle_through_diameter(Point a, Point b, const Tolerance& tol) {
  double d = distance(a, b);
  if (d <= tol.length_eps)
    throw DegenerateDiameter("diameter endpoints coincide");
  return Circle(midpoint(a, b), 0.5 * d);
}

}  // namespace arbelo
