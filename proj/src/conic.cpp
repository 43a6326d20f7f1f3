#include "arbelo/conic.hpp"

#include <algorithm>
#include <cmath>

namespace arbelo {

Conic::Conic(Point focus, Line directrix, double eccentricity,
             const Tolerance& tol)
    : focus_(focus), directrix_(directrix), ecc_(eccentricity) {
  if (!(eccentricity > 0.0) || !std::isfinite(eccentricity))
    throw GeometryError("conic eccentricity must be positive and finite");
  if (directrix.distance(focus) <= tol.length_eps)
    throw GeometryError("conic focus lies on the directrix");

  if (std::abs(ecc_ - 1.0) <= tol.rel_eps)
    kind_ = ConicKind::Parabola;
  else
    kind_ = ecc_ < 1.0 ? ConicKind::Ellipse : ConicKind::Hyperbola;

  // Expand |p - F|^2 = e^2 (n.p - c)^2.
  double e2 = ecc_ * ecc_;
  double nx = directrix_.normal.x, ny = directrix_.normal.y;
  double off = directrix_.offset;
  coeffs_[0] = 1.0 - e2 * nx * nx;
  coeffs_[1] = -2.0 * e2 * nx * ny;
  coeffs_[2] = 1.0 - e2 * ny * ny;
  coeffs_[3] = -2.0 * focus_.x + 2.0 * e2 * nx * off;
  coeffs_[4] = -2.0 * focus_.y + 2.0 * e2 * ny * off;
  coeffs_[5] = focus_.x * focus_.x + focus_.y * focus_.y - e2 * off * off;
  double m = 0.0;
  for (double v : coeffs_) m = std::max(m, std::abs(v));
  for (double& v : coeffs_) v /= m;
}

double Conic::implicit_value(Point p) const {
  const auto& q = coeffs_;
  return q[0] * p.x * p.x + q[1] * p.x * p.y + q[2] * p.y * p.y + q[3] * p.x +
         q[4] * p.y + q[5];
}

Vec Conic::implicit_gradient(Point p) const {
  const auto& q = coeffs_;
  return {2.0 * q[0] * p.x + q[1] * p.y + q[3],
          q[1] * p.x + 2.0 * q[2] * p.y + q[4]};
}

double Conic::focus_directrix_residual(Point p) const {
  return std::abs(distance(p, focus_) - ecc_ * directrix_.distance(p));
}

std::vector<Point> Conic::vertices() const {
  // Axis points p(t) = F + t*n solve |t| = e|s + t|, s the signed
  // focus-to-directrix distance.
  double s = directrix_.signed_distance(focus_);
  std::vector<Point> out;
  double ta = -ecc_ * s / (1.0 + ecc_);
  out.push_back(focus_ + directrix_.normal * ta);
  if (kind_ != ConicKind::Parabola) {
    double tb = ecc_ * s / (1.0 - ecc_);
    out.push_back(focus_ + directrix_.normal * tb);
  }
  return out;
}

Point Conic::center() const {
  if (kind_ == ConicKind::Parabola)
    throw GeometryError("a parabola has no center");
  auto v = vertices();
  return midpoint(v[0], v[1]);
}

Point Conic::point_at(double alpha) const {
  double s = directrix_.signed_distance(focus_);
  Vec u = (s > 0.0 ? -directrix_.normal : directrix_.normal);  // toward directrix
  double d0 = std::abs(s);
  double den = 1.0 + ecc_ * std::cos(alpha);
  if (!(den > 0.0))
    throw GeometryError("polar radius undefined at this angle");
  double r = ecc_ * d0 / den;
  Vec dir = u * std::cos(alpha) + u.perp() * std::sin(alpha);
  return focus_ + dir * r;
}

std::vector<Point> Conic::sample(int count) const {
  double s = directrix_.signed_distance(focus_);
  Vec u = (s > 0.0 ? -directrix_.normal : directrix_.normal);
  double d0 = std::abs(s);
  double rmax = 200.0 * (d0 + 1.0);
  std::vector<Point> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    double alpha = (i + 0.5) * 2.0 * M_PI / count;
    double ca = std::cos(alpha), sa = std::sin(alpha);
    Vec dir = u * ca + u.perp() * sa;
    double den = 1.0 + ecc_ * ca;
    if (den > 1e-12) {
      double r = ecc_ * d0 / den;
      if (r < rmax) out.push_back(focus_ + dir * r);
    }
    if (kind_ == ConicKind::Hyperbola) {
      double den2 = ecc_ * ca - 1.0;
      if (den2 > 1e-12) {
        double r = ecc_ * d0 / den2;
        if (r < rmax) out.push_back(focus_ + dir * r);
      }
    }
  }
  return out;
}

ConicKind classify(const Conic& k) { return k.kind(); }

Conic ellipse_from_foci(Point f_primary, Point f_other, double semi_major,
                        const Tolerance& tol) {
  double c = 0.5 * distance(f_primary, f_other);
  if (c <= tol.length_eps)
    throw GeometryError("coincident foci: ellipse degenerates to a circle");
  if (!(semi_major > c))
    throw GeometryError("ellipse semi-major axis must exceed half focal distance");
  Point ctr = midpoint(f_primary, f_other);
  Vec u = (f_primary - ctr).normalized();
  double e = c / semi_major;
  Line directrix =
      Line::through_point_with_normal(ctr + u * (semi_major / e), u);
  return Conic(f_primary, directrix, e, tol);
}

Conic hyperbola_from_foci(Point f_primary, Point f_other, double semi_major,
                          const Tolerance& tol) {
  double c = 0.5 * distance(f_primary, f_other);
  if (c <= tol.length_eps) throw DegenerateFoci("coincident hyperbola foci");
  if (!(semi_major > 0.0) || !(semi_major < c))
    throw DegenerateFoci("hyperbola semi-axis must lie in (0, half focal distance)");
  Point ctr = midpoint(f_primary, f_other);
  Vec u = (f_primary - ctr).normalized();
  double e = c / semi_major;
  Line directrix =
      Line::through_point_with_normal(ctr + u * (semi_major / e), u);
  return Conic(f_primary, directrix, e, tol);
}

Conic conic_with_other_focus(const Conic& k, const Tolerance& tol) {
  if (k.kind() == ConicKind::Parabola)
    throw GeometryError("a parabola has a single focus");
  Point ctr = k.center();
  Point other{2.0 * ctr.x - k.focus().x, 2.0 * ctr.y - k.focus().y};
  const Line& d = k.directrix();
  double off = 2.0 * d.normal.dot(ctr - Point{}) - d.offset;
  return Conic(other, Line(d.normal, off), k.eccentricity(), tol);
}

}  // namespace arbelo
