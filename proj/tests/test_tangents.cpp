#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "arbelo/polarity.hpp"
#include "arbelo/tangents.hpp"

using namespace arbelo;

TEST_CASE("tangent_lines_from_point") {
  Circle unit({0.0, 0.0}, 1.0);
  std::array<Point, 2> tp;
  auto lines = tangent_lines_from_point({2.0, 0.0}, unit, {}, &tp);
  CHECK(distance(tp[0], {0.5, -std::sqrt(3.0) / 2.0}) < 1e-12);
  CHECK(distance(tp[1], {0.5, std::sqrt(3.0) / 2.0}) < 1e-12);
  for (const Line& l : lines) {
    CHECK(std::abs(l.distance(unit.center) - 1.0) < 1e-12);
    CHECK(l.distance({2.0, 0.0}) < 1e-12);
  }

  Circle c2({0.0, 0.0}, std::sqrt(2.0));
  tangent_lines_from_point({0.0, 2.0}, c2, {}, &tp);
  CHECK(distance(tp[0], {-1.0, 1.0}) < 1e-12);
  CHECK(distance(tp[1], {1.0, 1.0}) < 1e-12);

  CHECK_THROWS_AS(tangent_lines_from_point({0.5, 0.0}, unit), PointInsideOrOn);
  CHECK_THROWS_AS(tangent_lines_from_point({1.0, 0.0}, unit), PointInsideOrOn);
}

TEST_CASE("tangent from O1 to the opposite sibling (symmetric arbelos)") {
  // R1 = R2 = 1: sibling s2 has diameter [O2, M] = [(1,0), (0,0)].
  Circle s2({0.5, 0.0}, 0.5);
  Point o1{-1.0, 0.0};
  auto lines = tangent_lines_from_point(o1, s2);
  for (const Line& l : lines) {
    CHECK(std::abs(l.distance(s2.center) - 0.5) < 1e-12);
    CHECK(l.distance(o1) < 1e-12);
  }
  // Projection distance of O2 matches the similar-triangles value
  // R2 (R1+R2) / (2 R1 + R2) = 2/3.
  Point o2{1.0, 0.0};
  CHECK(lines[1].distance(o2) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("common_tangents of two separate unit circles") {
  Circle a({0.0, 0.0}, 1.0), b({4.0, 0.0}, 1.0);
  auto ts = common_tangents(a, b);
  REQUIRE(ts.size() == 4);
  int external = 0, internal = 0;
  for (const auto& t : ts) {
    CHECK(std::abs(t.line.distance(a.center) - 1.0) < 1e-12);
    CHECK(std::abs(t.line.distance(b.center) - 1.0) < 1e-12);
    if (t.kind == SimilitudeKind::External) {
      ++external;
      CHECK(std::abs(std::abs(t.line.offset) - 1.0) < 1e-12);  // y = +-1
    } else {
      ++internal;
      CHECK(t.line.distance({2.0, 0.0}) < 1e-12);  // through the midpoint
    }
  }
  CHECK(external == 2);
  CHECK(internal == 2);
}

TEST_CASE("common_tangents degeneracies") {
  // Internally tangent: one common tangent at the contact point.
  auto one = common_tangents(Circle({0.0, 0.0}, 2.0), Circle({1.0, 0.0}, 1.0));
  REQUIRE(one.size() == 1);
  CHECK(same_line(one[0].line, Line({1.0, 0.0}, 2.0)));

  // Externally tangent: three.
  CHECK(common_tangents(Circle({0.0, 0.0}, 1.0), Circle({3.0, 0.0}, 2.0)).size()
        == 3);
  // Overlapping: two.
  CHECK(common_tangents(Circle({0.0, 0.0}, 1.5), Circle({2.0, 0.0}, 1.0)).size()
        == 2);
  // Nested: none.
  CHECK(common_tangents(Circle({0.0, 0.0}, 3.0), Circle({0.5, 0.0}, 1.0)).empty());

  CHECK_THROWS_AS(common_tangents(Circle({1.0, 1.0}, 2.0), Circle({1.0, 1.0}, 2.0)),
                  IdenticalCircles);
}

TEST_CASE("common tangent count across random configuration classes") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ur(0.3, 2.0);
  std::uniform_real_distribution<double> ut(0.1, 0.9);
  std::uniform_real_distribution<double> ua(0.0, 2.0 * M_PI);
  for (int i = 0; i < 100; ++i) {
    double r1 = ur(rng), r2 = ur(rng);
    if (std::abs(r1 - r2) < 0.05) r2 += 0.1;
    double angle = ua(rng);
    auto at = [&](double d) {
      return Circle(Point{d * std::cos(angle), d * std::sin(angle)}, r2);
    };
    Circle c1({0.0, 0.0}, r1);
    CHECK(common_tangents(c1, at(r1 + r2 + ur(rng))).size() == 4);
    CHECK(common_tangents(c1, at(r1 + r2)).size() == 3);
    double lo = std::abs(r1 - r2), hi = r1 + r2;
    CHECK(common_tangents(c1, at(lo + ut(rng) * (hi - lo))).size() == 2);
    CHECK(common_tangents(c1, at(lo)).size() == 1);
    CHECK(common_tangents(c1, at(ut(rng) * lo)).empty());
  }
}

TEST_CASE("similitude_centers") {
  auto eq = similitude_centers(Circle({0.0, 0.0}, 1.0), Circle({2.0, 0.0}, 1.0));
  CHECK_FALSE(eq.external.has_value());
  CHECK(distance(eq.internal.point, {1.0, 0.0}) < 1e-12);

  auto sc = similitude_centers(Circle({0.0, 0.0}, 1.0), Circle({3.0, 0.0}, 2.0));
  REQUIRE(sc.external.has_value());
  CHECK(distance(sc.internal.point, {1.0, 0.0}) < 1e-12);
  CHECK(distance(sc.external->point, {-3.0, 0.0}) < 1e-12);

  // Dual circles of the symmetric arbelos: external center at O2 = (1, 0),
  // ratio of radii (2 R1 + R2) / (R1 + R2) = 3/2.
  Circle ellipse_dual({-1.25, 0.0}, 0.75);
  Circle parabola_dual({-0.5, 0.0}, 0.5);
  auto hd = similitude_centers(ellipse_dual, parabola_dual);
  REQUIRE(hd.external.has_value());
  CHECK(distance(hd.external->point, {1.0, 0.0}) < 1e-12);
  for (const auto& t : common_tangents(ellipse_dual, parabola_dual))
    if (t.kind == SimilitudeKind::External)
      CHECK(t.line.distance({1.0, 0.0}) < 1e-12);
}

TEST_CASE("parabola_locus") {
  Circle unit({0.0, 0.0}, 1.0);
  Line l({0.0, 1.0}, -1.0);  // y = -1
  Conic p = parabola_locus(unit, l);
  CHECK(classify(p) == ConicKind::Parabola);
  CHECK(distance(p.focus(), {0.0, 0.0}) < 1e-12);
  CHECK(distance(p.vertices()[0], {0.0, -1.0}) < 1e-12);
  CHECK(same_line(p.directrix(), Line({0.0, 1.0}, -2.0)));

  // Locus point at x = 2: center (2, 0), radius dist-to-line = 1.
  Point s{2.0, 0.0};
  CHECK(p.focus_directrix_residual(s) < 1e-12);
  double rho = l.distance(s) - 0.0;
  CHECK(rho == doctest::Approx(1.0));
  CHECK(std::abs(distance(s, unit.center) - (unit.radius + 1.0)) < 1e-12);

  CHECK_THROWS_AS(parabola_locus(unit, Line({0.0, 1.0}, -2.0)), LineNotTangent);
}

TEST_CASE("ellipse_locus") {
  Circle outer({0.0, 0.0}, 2.0), inner({1.0, 0.0}, 1.0);
  Conic e = ellipse_locus(outer, inner);
  CHECK(classify(e) == ConicKind::Ellipse);
  CHECK(e.focus_directrix_residual({2.0, 0.0}) < 1e-12);  // tangency point

  // Sampled points are centers of circles tangent to both.
  for (Point p : e.sample(64)) {
    double rho = outer.radius - distance(p, outer.center);
    REQUIRE(rho > 0.0);
    CHECK(std::abs(distance(p, inner.center) - (inner.radius + rho)) < 1e-7);
  }

  CHECK_THROWS_AS(ellipse_locus(outer, Circle({0.2, 0.0}, 1.0)),
                  NotInternallyTangent);
}

TEST_CASE("hyperbola_locus") {
  CHECK_THROWS_AS(hyperbola_locus(Circle({-2.0, 0.0}, 2.0),
                                  Circle({2.0, 0.0}, 2.0), {0.0, 0.0}),
                  DegenerateFoci);

  // Doubling arbelos R1=2, R2=1: circles at A1, A2 through M.
  Circle big1({-3.0, 0.0}, 4.0), big2({3.0, 0.0}, 2.0);
  Conic h = hyperbola_locus(big1, big2, {1.0, 0.0});
  CHECK(classify(h) == ConicKind::Hyperbola);
  int checked = 0;
  for (Point p : h.sample(64)) {
    double diff = distance(p, big1.center) - distance(p, big2.center);
    CHECK(std::abs(std::abs(diff) - 2.0) < 1e-7);
    // Branch of the tangency locus: externally tangent to both circles.
    double rho = distance(p, big1.center) - big1.radius;
    if (rho > 1e-6 &&
        std::abs(distance(p, big2.center) - (big2.radius + rho)) < 1e-7) {
      CHECK(std::abs(distance(p, big1.center) - (big1.radius + rho)) < 1e-7);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("intersect_conic_line hits the vertices along the axis") {
  Conic e = ellipse_from_foci({1.0, 0.0}, {-1.0, 0.0}, 2.0);
  auto pts = intersect_conic_line(e, Line({0.0, 1.0}, 0.0));
  REQUIRE(pts.size() == 2);
  CHECK(distance(pts[0], {-2.0, 0.0}) < 1e-9);
  CHECK(distance(pts[1], {2.0, 0.0}) < 1e-9);
}

TEST_CASE("intersect_numeric on crossed ellipses") {
  // x^2/4 + y^2 = 1 and x^2 + y^2/4 = 1 meet at (+-2/sqrt5, +-2/sqrt5).
  double c = std::sqrt(3.0);
  Conic e1 = ellipse_from_foci({c, 0.0}, {-c, 0.0}, 2.0);
  Conic e2 = ellipse_from_foci({0.0, c}, {0.0, -c}, 2.0);
  auto pts = intersect_numeric(e1, e2);
  REQUIRE(pts.size() == 4);
  double v = 2.0 / std::sqrt(5.0);
  CHECK(distance(pts[0].point, {-v, -v}) < 1e-9);
  CHECK(distance(pts[1].point, {-v, v}) < 1e-9);
  CHECK(distance(pts[2].point, {v, -v}) < 1e-9);
  CHECK(distance(pts[3].point, {v, v}) < 1e-9);
}

TEST_CASE("degenerate conics are rejected at construction") {
  CHECK_THROWS_AS(Conic({0.0, 0.0}, Line({1.0, 0.0}, 0.0), 1.0),
                  GeometryError);
  CHECK_THROWS_AS(Conic({0.0, 0.0}, Line({1.0, 0.0}, 2.0), 0.0),
                  GeometryError);
}

TEST_CASE("intersect_shared_focus finds the twin center") {
  // Symmetric arbelos: E1 (foci O1, O through A1) x P1 (focus O1, vertex M)
  // meets at the twin center (-1/2, sqrt 2).
  Circle inner1({-1.0, 0.0}, 1.0);
  Conic e1 = ellipse_from_foci({-1.0, 0.0}, {0.0, 0.0}, 1.5);
  Conic p1 = parabola_locus(inner1, Line({1.0, 0.0}, 0.0));
  auto pts = intersect_shared_focus(e1, p1, inner1);
  REQUIRE(!pts.empty());
  double best = 1e9;
  for (Point p : pts)
    best = std::min(best, distance(p, {-0.5, std::sqrt(2.0)}));
  CHECK(best < 1e-9);

  CHECK_THROWS_AS(intersect_shared_focus(e1, p1, Circle({3.0, 0.0}, 1.0)),
                  FociDiffer);
}

TEST_CASE("disjoint confocal ellipses have empty intersection") {
  Conic a = ellipse_from_foci({0.0, 0.0}, {2.0, 0.0}, 1.5);
  Conic b = ellipse_from_foci({0.0, 0.0}, {2.0, 0.0}, 3.0);
  CHECK(intersect_shared_focus(a, b, Circle({0.0, 0.0}, 1.0)).empty());
  CHECK(intersect_numeric(a, b).empty());
}

namespace {

// Random conic with primary focus F, eccentricity in [0.2, 3] away from 1.
Conic random_confocal(Point f, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ue(0.2, 3.0);
  std::uniform_real_distribution<double> uc(0.5, 3.0);
  std::uniform_real_distribution<double> ua(0.0, 2.0 * M_PI);
  double e = ue(rng);
  while (std::abs(e - 1.0) < 0.05) e = ue(rng);
  double c = uc(rng);
  double t = ua(rng);
  Point other = f + Vec{std::cos(t), std::sin(t)} * (2.0 * c);
  return e < 1.0 ? ellipse_from_foci(f, other, c / e)
                 : hyperbola_from_foci(f, other, c / e);
}

}  // namespace

TEST_CASE("shared-focus and pencil intersections agree") {
  std::mt19937_64 rng(43);
  Point f{0.3, -0.2};
  Circle inv(f, 1.2);
  int done = 0;
  while (done < 50) {
    Conic k1 = random_confocal(f, rng);
    Conic k2 = random_confocal(f, rng);
    std::vector<ConicIntersection> numeric;
    try {
      numeric = intersect_numeric(k1, k2);
    } catch (const GeometryError&) {
      continue;
    }
    bool near_tangent = false;
    for (const auto& ci : numeric)
      if (ci.multiplicity > 1) near_tangent = true;
    for (size_t i = 0; i + 1 < numeric.size(); ++i)
      if (distance(numeric[i].point, numeric[i + 1].point) < 1e-4)
        near_tangent = true;
    if (near_tangent) continue;
    ++done;

    auto dual = intersect_shared_focus(k1, k2, inv);
    REQUIRE(dual.size() == numeric.size());
    for (size_t i = 0; i < dual.size(); ++i)
      CHECK(distance(dual[i], numeric[i].point) < 1e-7);
  }
}
