#include <doctest.h>

#include <cmath>
#include <random>

#include "arbelo/polarity.hpp"

using namespace arbelo;

TEST_CASE("pole_of_line") {
  Circle unit({0.0, 0.0}, 1.0);
  Point p = pole_of_line(Line({1.0, 0.0}, 1.0), unit);  // tangent x=1
  CHECK(p.x == doctest::Approx(1.0));
  CHECK(p.y == doctest::Approx(0.0));

  Point q = pole_of_line(Line({1.0, 0.0}, 2.0), unit);
  CHECK(q.x == doctest::Approx(0.5));

  Circle two({0.0, 0.0}, 2.0);
  Point r = pole_of_line(Line({1.0, 0.0}, 4.0), two);
  CHECK(r.x == doctest::Approx(1.0));

  CHECK_THROWS_AS(pole_of_line(Line({1.0, 0.0}, 0.0), unit), LineThroughCenter);
}

TEST_CASE("polar_of_point") {
  Circle unit({0.0, 0.0}, 1.0);
  Line l = polar_of_point({2.0, 0.0}, unit);
  CHECK(same_line(l, Line({1.0, 0.0}, 0.5)));

  // Point on the circle: polar is the tangent there.
  Point on{std::cos(1.1), std::sin(1.1)};
  Line t = polar_of_point(on, unit);
  CHECK(t.distance(on) < 1e-12);
  CHECK(std::abs(t.distance(unit.center) - 1.0) < 1e-12);

  CHECK_THROWS_AS(polar_of_point({0.0, 0.0}, unit), CenterHasNoPolar);
}

TEST_CASE("pole/polar round trip") {
  Circle inv({0.4, -0.3}, 1.7);
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    Line l(Vec{u(rng), u(rng) + 0.01}, u(rng));
    if (l.distance(inv.center) < 1e-3) continue;
    Line back = polar_of_point(pole_of_line(l, inv), inv);
    CHECK(same_line(back, l, Tolerance{1e-9, 1e-7, 1e-9}));
  }
}

TEST_CASE("dual_of_circle eccentricity and kind") {
  Circle unit({0.0, 0.0}, 1.0);

  // Center outside the reciprocated circle (d > r): hyperbola, e = d/r.
  Conic hyp = dual_of_circle(Circle({2.0, 0.0}, 1.0), unit);
  CHECK(hyp.eccentricity() == doctest::Approx(2.0));
  CHECK(classify(hyp) == ConicKind::Hyperbola);
  CHECK(distance(hyp.focus(), {0.0, 0.0}) < 1e-12);
  CHECK(same_line(hyp.directrix(), Line({1.0, 0.0}, 0.5)));
  // Vertices are the poles of the axis-normal tangents x = 1 and x = 3.
  CHECK(hyp.focus_directrix_residual({1.0, 0.0}) < 1e-12);
  CHECK(hyp.focus_directrix_residual({1.0 / 3.0, 0.0}) < 1e-12);

  // Center inside (d < r): ellipse, e = d/r.
  Conic ell = dual_of_circle(Circle({1.0, 0.0}, 2.0), unit);
  CHECK(ell.eccentricity() == doctest::Approx(0.5));
  CHECK(classify(ell) == ConicKind::Ellipse);

  CHECK_THROWS_AS(dual_of_circle(Circle({0.0, 0.0}, 2.0), unit),
                  ConcentricDegenerate);
  CHECK_THROWS_AS(dual_of_circle(Circle({1.0, 0.0}, 1.0),
                                 Circle({0.0, 0.0}, 0.5)),
                  FocusOnCurve);
}

TEST_CASE("dual_of_conic") {
  Circle unit({0.0, 0.0}, 1.0);

  SUBCASE("round trip restores the circle") {
    Circle c({2.0, 0.0}, 1.0);
    Circle back = dual_of_conic(dual_of_circle(c, unit), unit);
    CHECK(distance(back.center, c.center) < 1e-12);
    CHECK(back.radius == doctest::Approx(c.radius).epsilon(1e-12));
  }

  SUBCASE("parabola dual has the inversion center on its diameter") {
    // Focus at the origin, vertex (0.5, 0): directrix x = 1.
    Conic par({0.0, 0.0}, Line({1.0, 0.0}, 1.0), 1.0);
    auto v = par.vertices();
    REQUIRE(v.size() == 1);
    CHECK(distance(v[0], {0.5, 0.0}) < 1e-12);
    Circle d = dual_of_conic(par, unit);
    CHECK(distance(d.center, {1.0, 0.0}) < 1e-12);
    CHECK(d.radius == doctest::Approx(1.0));
    // The circle passes through the inversion center, so it cannot be fed
    // back through dual_of_circle; verify the reciprocity pointwise
    // instead: the pole of each parabola tangent lies on the circle.
    for (Point p : par.sample(32)) {
      Vec g = par.implicit_gradient(p);
      Line tangent = Line::through_point_with_normal(p, g.normalized());
      if (tangent.distance({0.0, 0.0}) < 1e-6) continue;
      Point pole = pole_of_line(tangent, unit);
      CHECK(std::abs(distance(pole, d.center) - d.radius) < 1e-7);
    }
  }

  SUBCASE("ellipse vertices invert to the diameter endpoints") {
    // Vertices (1,0) and (-3,0), focus at the origin.
    Conic ell = ellipse_from_foci({0.0, 0.0}, {-2.0, 0.0}, 2.0);
    auto v = ell.vertices();
    REQUIRE(v.size() == 2);
    CHECK(distance(v[0], {1.0, 0.0}) < 1e-12);
    CHECK(distance(v[1], {-3.0, 0.0}) < 1e-12);
    Circle d = dual_of_conic(ell, unit);
    CHECK(std::abs(distance({1.0, 0.0}, d.center) - d.radius) < 1e-12);
    CHECK(std::abs(distance({-1.0 / 3.0, 0.0}, d.center) - d.radius) < 1e-12);
    Circle back = dual_of_conic(dual_of_circle(d, unit), unit);
    CHECK(distance(back.center, d.center) < 1e-12);
  }

  SUBCASE("inversion away from focus rejected") {
    Conic ell = ellipse_from_foci({0.0, 0.0}, {-2.0, 0.0}, 2.0);
    CHECK_THROWS_AS(dual_of_conic(ell, Circle({5.0, 0.0}, 1.0)),
                    InversionNotAtFocus);
  }
}

TEST_CASE("duality round trip on random admissible pairs") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> ur(0.2, 3.0);
  int done = 0;
  while (done < 200) {
    Circle c({u(rng), u(rng)}, ur(rng));
    Circle inv({u(rng), u(rng)}, ur(rng));
    double d = distance(c.center, inv.center);
    if (d < 0.05 || std::abs(d - c.radius) < 0.05) continue;
    ++done;
    Conic k = dual_of_circle(c, inv);
    CHECK(k.eccentricity() == doctest::Approx(d / c.radius).epsilon(1e-12));
    Circle back = dual_of_conic(k, inv);
    CHECK(distance(back.center, c.center) < 1e-9 * std::max(1.0, d));
    CHECK(std::abs(back.radius - c.radius) < 1e-9 * c.radius);
  }
}

TEST_CASE("incidence duality") {
  Circle inv({0.2, 0.1}, 1.3);
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  int done = 0;
  while (done < 100) {
    Line l(Vec{u(rng), u(rng) + 0.01}, u(rng));
    if (l.distance(inv.center) < 0.05) continue;
    // Random point on l.
    Point p0 = l.base_point();
    Point p = p0 + l.direction() * u(rng);
    if (distance(p, inv.center) < 0.05) continue;
    ++done;
    Point pole = pole_of_line(l, inv);
    Line polar = polar_of_point(p, inv);
    CHECK(polar.distance(pole) < 1e-9);
  }
}

TEST_CASE("sampled conic points satisfy both defining forms") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> ue(0.2, 3.0);
  for (int i = 0; i < 20; ++i) {
    double e = ue(rng);
    if (std::abs(e - 1.0) < 0.05) e = 1.0;
    Conic k({u(rng), u(rng)}, Line(Vec{u(rng), u(rng) + 0.01}, u(rng) + 5.0), e);
    for (Point p : k.sample(64)) {
      CHECK(k.focus_directrix_residual(p) < 1e-7);
      CHECK(std::abs(k.implicit_value(p)) < 1e-7);
    }
  }
}

TEST_CASE("tangency duality: poles of tangents lie on the dual conic") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  std::uniform_real_distribution<double> ur(0.3, 2.5);
  std::uniform_real_distribution<double> ua(0.0, 2.0 * M_PI);
  int done = 0;
  while (done < 200) {
    Circle c({u(rng), u(rng)}, ur(rng));
    Circle inv({u(rng), u(rng)}, ur(rng));
    double d = distance(c.center, inv.center);
    if (d < 0.05 || std::abs(d - c.radius) < 0.05) continue;
    double t = ua(rng);
    Vec n{std::cos(t), std::sin(t)};
    Line tangent = Line::through_point_with_normal(c.center + n * c.radius, n);
    if (tangent.distance(inv.center) < 0.05) continue;
    ++done;
    Point pole = pole_of_line(tangent, inv);
    Conic dual = dual_of_circle(c, inv);
    CHECK(dual.focus_directrix_residual(pole) < 1e-7);
  }
}
