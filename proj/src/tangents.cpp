#include "arbelo/tangents.hpp"

#include <algorithm>
#include <cmath>

#include "arbelo/polarity.hpp"

namespace arbelo {

namespace {

// Collapse threshold for nearly-coincident tangent pairs (sin of the half
// angle between them); exact tangency lands many orders below this.
constexpr double kTangentSinEps = 1e-6;

// Merge radius for near-double conic intersections.
constexpr double kMergeRadius = 1e-6;

double line_angle(const Line& l) { return std::atan2(l.normal.y, l.normal.x); }

using Mat3 = std::array<std::array<double, 3>, 3>;
using HLine = std::array<double, 3>;  // g0 x + g1 y + g2 = 0

Mat3 conic_matrix(const Conic& k) {
  const auto& q = k.implicit_coeffs();
  return {{{q[0], q[1] / 2, q[3] / 2},
           {q[1] / 2, q[2], q[4] / 2},
           {q[3] / 2, q[4] / 2, q[5]}}};
}

double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 adjugate(const Mat3& m) {
  Mat3 a;
  a[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  a[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  a[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  a[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  a[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  a[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  a[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  a[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  a[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return a;
}

Mat3 blend(const Mat3& a, const Mat3& b, double lambda) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i][j] = lambda * a[i][j] + (1.0 - lambda) * b[i][j];
  return r;
}

// Real roots of a*x^3 + b*x^2 + c*x + d, degrading gracefully to
// quadratic/linear when leading coefficients vanish.
std::vector<double> real_roots_cubic(double a, double b, double c, double d) {
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!(scale > 0.0)) return {};
  a /= scale; b /= scale; c /= scale; d /= scale;

  std::vector<double> roots;
  if (std::abs(a) < 1e-12) {
    if (std::abs(b) < 1e-12) {
      if (std::abs(c) >= 1e-12) roots.push_back(-d / c);
    } else {
      double disc = c * c - 4.0 * b * d;
      if (disc >= 0.0) {
        double s = std::sqrt(disc);
        roots.push_back((-c + s) / (2.0 * b));
        roots.push_back((-c - s) / (2.0 * b));
      }
    }
  } else {
    // Depressed form t^3 + p t + q, x = t - b/(3a).
    double shift = b / (3.0 * a);
    double p = c / a - shift * shift * 3.0;
    double q = 2.0 * shift * shift * shift - shift * c / a + d / a;
    double disc = -4.0 * p * p * p - 27.0 * q * q;
    if (disc >= 0.0 && p < 0.0) {
      double m = 2.0 * std::sqrt(-p / 3.0);
      double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
      double theta = std::acos(arg) / 3.0;
      for (int k = 0; k < 3; ++k)
        roots.push_back(m * std::cos(theta - 2.0 * M_PI * k / 3.0) - shift);
    } else {
      double h = std::sqrt(std::max(0.0, q * q / 4.0 + p * p * p / 27.0));
      double u = std::cbrt(-q / 2.0 + h);
      double v = std::cbrt(-q / 2.0 - h);
      roots.push_back(u + v - shift);
    }
  }
  // One Newton step to tighten each root.
  for (double& x : roots) {
    double f = ((a * x + b) * x + c) * x + d;
    double fp = (3.0 * a * x + 2.0 * b) * x + c;
    if (std::abs(fp) > 1e-14) x -= f / fp;
  }
  return roots;
}

// Split a degenerate (rank <= 2) conic matrix into real lines.
// Empty result means a complex line pair.
std::vector<HLine> split_degenerate(Mat3 n) {
  double m = 0.0;
  for (auto& row : n)
    for (double v : row) m = std::max(m, std::abs(v));
  if (!(m > 0.0)) return {};
  for (auto& row : n)
    for (double& v : row) v /= m;

  Mat3 b = adjugate(n);
  int i = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(b[k][k]) > std::abs(b[i][i])) i = k;

  if (std::abs(b[i][i]) < 1e-10) {
    // Rank one: a repeated line, read off the strongest row.
    int r = 0;
    double best = 0.0;
    for (int k = 0; k < 3; ++k) {
      double s = std::abs(n[k][0]) + std::abs(n[k][1]) + std::abs(n[k][2]);
      if (s > best) { best = s; r = k; }
    }
    if (best < 1e-10) return {};
    return {HLine{n[r][0], n[r][1], n[r][2]}};
  }
  if (b[i][i] > 0.0) return {};  // complex pair

  double beta = std::sqrt(-b[i][i]);
  double p0 = b[0][i] / beta, p1 = b[1][i] / beta, p2 = b[2][i] / beta;
  Mat3 c = n;
  c[0][1] += p2; c[1][0] -= p2;
  c[0][2] -= p1; c[2][0] += p1;
  c[1][2] += p0; c[2][1] -= p0;

  int br = 0, bc = 0;
  double best = -1.0;
  for (int r = 0; r < 3; ++r)
    for (int cc = 0; cc < 3; ++cc)
      if (std::abs(c[r][cc]) > best) { best = std::abs(c[r][cc]); br = r; bc = cc; }
  if (best < 1e-10) return {};
  return {HLine{c[br][0], c[br][1], c[br][2]},
          HLine{c[0][bc], c[1][bc], c[2][bc]}};
}

// Newton polish on the pair of implicit forms.
Point polish(Point p, const Conic& k1, const Conic& k2) {
  for (int it = 0; it < 25; ++it) {
    double f1 = k1.implicit_value(p), f2 = k2.implicit_value(p);
    if (std::abs(f1) < 1e-14 && std::abs(f2) < 1e-14) break;
    Vec g1 = k1.implicit_gradient(p), g2 = k2.implicit_gradient(p);
    double det = g1.x * g2.y - g1.y * g2.x;
    if (std::abs(det) < 1e-13) break;
    double dx = (f1 * g2.y - f2 * g1.y) / det;
    double dy = (g1.x * f2 - g2.x * f1) / det;
    p = Point{p.x - dx, p.y - dy};
    if (std::abs(dx) < 1e-15 && std::abs(dy) < 1e-15) break;
  }
  return p;
}

}  // namespace

bool point_less(Point a, Point b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::array<Line, 2> tangent_lines_from_point(Point p, const Circle& c,
                                             const Tolerance& tol,
                                             std::array<Point, 2>* tangency_points) {
  Vec v = p - c.center;
  double dist = v.norm();
  if (dist <= c.radius + tol.length_eps)
    throw PointInsideOrOn("point is inside or on the circle");
  Vec a = v / dist;
  double len = std::sqrt(dist * dist - c.radius * c.radius);
  // Contact points: center + (r^2/d) a +- (r len / d) perp(a).
  Point t0 = c.center + a * (c.radius * c.radius / dist) +
             a.perp() * (c.radius * len / dist);
  Point t1 = c.center + a * (c.radius * c.radius / dist) -
             a.perp() * (c.radius * len / dist);
  if (t1.y < t0.y || (t1.y == t0.y && t1.x < t0.x)) std::swap(t0, t1);
  if (tangency_points) (*tangency_points) = {t0, t1};
  return {Line::through_points(p, t0), Line::through_points(p, t1)};
}

std::vector<CommonTangent> common_tangents(const Circle& c1, const Circle& c2,
                                           const Tolerance& tol) {
  double d = distance(c1.center, c2.center);
  if (d <= tol.length_eps &&
      std::abs(c1.radius - c2.radius) <= tol.rel_eps * c1.radius)
    throw IdenticalCircles("common tangents of identical circles");

  std::vector<CommonTangent> out;
  if (d <= tol.length_eps) return out;  // concentric, none
  Vec w = (c1.center - c2.center) / d;

  auto add_family = [&](double k, SimilitudeKind kind) {
    // Tangents n.p = c with n.(C1-C2) = k, signed offsets +r1 / (+-)r2.
    double cosphi = k / d;
    double s2 = 1.0 - cosphi * cosphi;
    if (s2 < -2.0 * kTangentSinEps * kTangentSinEps) return;
    if (s2 < kTangentSinEps * kTangentSinEps) {
      Vec n = w * std::clamp(cosphi, -1.0, 1.0);
      if (n.norm() > 0.5) {
        Line l(n, n.dot(c1.center - Point{}) - c1.radius);
        out.push_back({l, kind});
      }
      return;
    }
    double sinphi = std::sqrt(s2);
    for (double sgn : {+1.0, -1.0}) {
      Vec n = w * cosphi + w.perp() * (sgn * sinphi);
      Line l(n, n.dot(c1.center - Point{}) - c1.radius);
      out.push_back({l, kind});
    }
  };

  add_family(c1.radius - c2.radius, SimilitudeKind::External);
  add_family(c1.radius + c2.radius, SimilitudeKind::Internal);

  std::sort(out.begin(), out.end(), [](const CommonTangent& a, const CommonTangent& b) {
    double aa = line_angle(a.line), ab = line_angle(b.line);
    if (aa != ab) return aa < ab;
    return a.line.offset < b.line.offset;
  });
  return out;
}

SimilitudeCenters similitude_centers(const Circle& c1, const Circle& c2,
                                     const Tolerance& tol) {
  double d = distance(c1.center, c2.center);
  if (d <= tol.length_eps &&
      std::abs(c1.radius - c2.radius) <= tol.rel_eps * c1.radius)
    throw IdenticalCircles("similitude centers of identical circles");
  double r1 = c1.radius, r2 = c2.radius;
  Point internal{(r2 * c1.center.x + r1 * c2.center.x) / (r1 + r2),
                 (r2 * c1.center.y + r1 * c2.center.y) / (r1 + r2)};
  SimilitudeCenters sc{std::nullopt, {internal, SimilitudeKind::Internal}};
  if (std::abs(r1 - r2) > tol.rel_eps * std::max(r1, r2)) {
    Point external{(r2 * c1.center.x - r1 * c2.center.x) / (r2 - r1),
                   (r2 * c1.center.y - r1 * c2.center.y) / (r2 - r1)};
    sc.external = SimilitudeCenter{external, SimilitudeKind::External};
  }
  return sc;
}

Conic parabola_locus(const Circle& c, const Line& l, const Tolerance& tol) {
  if (std::abs(l.distance(c.center) - c.radius) > tol.residual_eps)
    throw LineNotTangent("line is not tangent to the circle");
  Point vertex = project_point_on_line(c.center, l);
  Vec axis = c.center - vertex;  // vertex -> focus
  Point on_directrix = vertex - axis;
  return Conic(c.center, Line::through_point_with_normal(on_directrix, axis),
               1.0, tol);
}

Conic ellipse_locus(const Circle& outer, const Circle& inner,
                    const Tolerance& tol) {
  double d = distance(outer.center, inner.center);
  if (std::abs(d - (outer.radius - inner.radius)) > tol.residual_eps ||
      d <= tol.length_eps)
    throw NotInternallyTangent("circles are not internally tangent");
  return ellipse_from_foci(inner.center, outer.center,
                           0.5 * (outer.radius + inner.radius), tol);
}

Conic hyperbola_locus(const Circle& c1, const Circle& c2, Point through,
                      const Tolerance& tol) {
  double a =
      0.5 * std::abs(distance(through, c1.center) - distance(through, c2.center));
  double c = 0.5 * distance(c1.center, c2.center);
  if (a <= tol.length_eps || a >= c - tol.length_eps)
    throw DegenerateFoci("hyperbola locus degenerates");
  return hyperbola_from_foci(c1.center, c2.center, a, tol);
}

std::vector<Point> intersect_shared_focus(const Conic& k1, const Conic& k2,
                                          const Circle& inv,
                                          const Tolerance& tol) {
  if (distance(k1.focus(), inv.center) > tol.length_eps ||
      distance(k2.focus(), inv.center) > tol.length_eps)
    throw FociDiffer("conics must share a focus at the inversion center");
  Circle d1 = dual_of_conic(k1, inv, tol);
  Circle d2 = dual_of_conic(k2, inv, tol);
  std::vector<Point> out;
  for (const auto& t : common_tangents(d1, d2, tol)) {
    if (t.line.distance(inv.center) <= tol.length_eps) continue;
    Point p = pole_of_line(t.line, inv, tol);
    p = polish(p, k1, k2);
    if (k1.focus_directrix_residual(p) <= tol.residual_eps &&
        k2.focus_directrix_residual(p) <= tol.residual_eps)
      out.push_back(p);
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

std::vector<Point> intersect_conic_line(const Conic& k, const Line& l,
                                        const Tolerance& tol) {
  const auto& q = k.implicit_coeffs();
  Point p0 = l.base_point();
  Vec d = l.direction();
  double A = q[0] * d.x * d.x + q[1] * d.x * d.y + q[2] * d.y * d.y;
  double B = 2.0 * q[0] * p0.x * d.x + q[1] * (p0.x * d.y + p0.y * d.x) +
             2.0 * q[2] * p0.y * d.y + q[3] * d.x + q[4] * d.y;
  double C = k.implicit_value(p0);
  std::vector<double> ts;
  if (std::abs(A) < 1e-14 * std::max(1.0, std::abs(B))) {
    if (std::abs(B) > 1e-14) ts.push_back(-C / B);
  } else {
    double disc = B * B - 4.0 * A * C;
    double scale = std::max({B * B, std::abs(4.0 * A * C), 1e-300});
    if (disc >= 0.0) {
      double s = std::sqrt(disc);
      // Citardauq, avoids cancellation.
      double qq = -0.5 * (B + (B >= 0.0 ? s : -s));
      ts.push_back(qq / A);
      if (std::abs(qq) > 1e-300) ts.push_back(C / qq);
    } else if (disc > -1e-10 * scale) {
      ts.push_back(-B / (2.0 * A));
    }
  }
  std::vector<Point> out;
  for (double t : ts) out.push_back(p0 + d * t);
  std::sort(out.begin(), out.end(), point_less);
  (void)tol;
  return out;
}

std::vector<ConicIntersection> intersect_numeric(const Conic& k1,
                                                 const Conic& k2,
                                                 const Tolerance& tol) {
  Mat3 m1 = conic_matrix(k1), m2 = conic_matrix(k2);
  if (std::abs(det3(m1)) < 1e-12 && std::abs(det3(m2)) < 1e-12)
    throw IllConditioned("both pencil generators are degenerate");

  // det(lambda m1 + (1-lambda) m2) is cubic in lambda; recover its
  // coefficients by interpolation at four sample values.
  double pm1 = det3(blend(m1, m2, -1.0));
  double p0v = det3(m2);
  double p1v = det3(m1);
  double p2v = det3(blend(m1, m2, 2.0));
  double dcoef = p0v;
  double bcoef = 0.5 * (p1v + pm1) - dcoef;
  double sum_ac = 0.5 * (p1v - pm1);
  double acoef = (p2v - dcoef - 4.0 * bcoef - 2.0 * sum_ac) / 6.0;
  double ccoef = sum_ac - acoef;

  std::vector<Point> pts;
  for (double lambda : real_roots_cubic(acoef, bcoef, ccoef, dcoef)) {
    auto lines = split_degenerate(blend(m1, m2, lambda));
    if (lines.empty()) continue;
    std::vector<Point> cand;
    for (const auto& g : lines) {
      if (std::hypot(g[0], g[1]) < 1e-12 * std::abs(g[2])) continue;
      Line l(Vec{g[0], g[1]}, -g[2]);
      for (Point p : intersect_conic_line(k1, l, tol)) {
        p = polish(p, k1, k2);
        if (k1.focus_directrix_residual(p) <= tol.residual_eps &&
            k2.focus_directrix_residual(p) <= tol.residual_eps)
          cand.push_back(p);
      }
    }
    if (!cand.empty()) { pts = std::move(cand); break; }
  }

  std::sort(pts.begin(), pts.end(), point_less);
  std::vector<ConicIntersection> out;
  for (const Point& p : pts) {
    if (!out.empty() && distance(out.back().point, p) < kMergeRadius)
      out.back().multiplicity = 2;
    else
      out.push_back({p, 1});
  }
  return out;
}

}  // namespace arbelo
