#include "arbelo/polarity.hpp"

#include <cmath>

namespace arbelo {

Point pole_of_line(const Line& l, const Circle& inv, const Tolerance& tol) {
  if (l.distance(inv.center) <= tol.length_eps)
    throw LineThroughCenter("line passes through the inversion center");
  return invert_point(project_point_on_line(inv.center, l), inv, tol);
}

Line polar_of_point(Point p, const Circle& inv, const Tolerance& tol) {
  Vec v = p - inv.center;
  if (v.norm() <= tol.length_eps)
    throw CenterHasNoPolar("the inversion center has no polar");
  Point q = invert_point(p, inv, tol);
  return Line::through_point_with_normal(q, v.normalized());
}

Conic dual_of_circle(const Circle& c, const Circle& inv, const Tolerance& tol) {
  double d = distance(c.center, inv.center);
  if (d <= tol.length_eps)
    throw ConcentricDegenerate(
        "dual of a concentric circle is a circle, not a conic");
  if (std::abs(d - c.radius) <= tol.length_eps)
    throw FocusOnCurve("inversion center lies on the reciprocated circle");
  Line directrix = polar_of_point(c.center, inv, tol);
  // Reciprocation sends tangent lines to points: the pole of the tangent
  // with unit normal n at offset n.O +- r is n / (n.(O - center) -+ r),
  // which traces r(theta) = R^2 / (d cos(theta) +- r) around inv.center —
  // a conic of eccentricity d / r.
  return Conic(inv.center, directrix, d / c.radius, tol);
}

Circle dual_of_conic(const Conic& k, const Circle& inv, const Tolerance& tol) {
  if (distance(k.focus(), inv.center) > tol.length_eps)
    throw InversionNotAtFocus("inversion circle must be centered at the focus");
  auto verts = k.vertices();
  Point a = invert_point(verts[0], inv, tol);
  Point b = k.kind() == ConicKind::Parabola ? inv.center
                                            : invert_point(verts[1], inv, tol);
  return circle_through_diameter(a, b, tol);
}

}  // namespace arbelo
