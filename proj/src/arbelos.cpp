#include "arbelo/arbelos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "arbelo/polarity.hpp"
#include "arbelo/tangents.hpp"

namespace arbelo {

Arbelos::Arbelos(double R1, double R2) : r1_(R1), r2_(R2) {
  if (!(R1 > 0.0) || !(R2 > 0.0) || !std::isfinite(R1) || !std::isfinite(R2))
    throw NonPositiveRadius("arbelos radii must be positive and finite");
}

Arbelos make_arbelos(double R1, double R2) { return Arbelos(R1, R2); }

Siblings siblings(const Arbelos& a) {
  return {circle_through_diameter(a.O1(), a.M()),
          circle_through_diameter(a.O2(), a.M())};
}

DoublingArbelos make_doubling_arbelos(const Arbelos& a) {
  return {a, Circle(a.A1(), 2.0 * a.r1()), Circle(a.A2(), 2.0 * a.r2())};
}

double TangencyConstraint::residual(const Circle& c) const {
  if (std::holds_alternative<Line>(target))
    return std::abs(std::get<Line>(target).distance(c.center) - c.radius);
  const Circle& t = std::get<Circle>(target);
  double d = distance(c.center, t.center);
  if (contact == Contact::External) return std::abs(d - (t.radius + c.radius));
  return std::abs(d - std::abs(t.radius - c.radius));
}

const char* contact_name(TangencyConstraint::Contact k) {
  switch (k) {
    case TangencyConstraint::Contact::Internal: return "internal";
    case TangencyConstraint::Contact::External: return "external";
    default: return "line";
  }
}

namespace {

using Contact = TangencyConstraint::Contact;

TangencyConstraint circle_constraint(std::string name, const Circle& c,
                                     Contact contact) {
  return {std::move(name), c, contact};
}

TangencyConstraint line_constraint(std::string name, const Line& l) {
  return {std::move(name), l, Contact::LineTangent};
}

double max_residual(const Circle& c,
                    const std::vector<TangencyConstraint>& cons) {
  double m = 0.0;
  for (const auto& tc : cons) m = std::max(m, tc.residual(c));
  return m;
}

// Among intersection candidates, the one whose circle (with the radius
// implied by `radius_of`) best satisfies the constraints; upper half
// plane preferred via the candidate filter in the callers.
template <class RadiusOf>
Circle pick_candidate(const std::vector<Point>& candidates, RadiusOf radius_of,
                      const std::vector<TangencyConstraint>& cons) {
  double best = std::numeric_limits<double>::infinity();
  Circle out;
  bool found = false;
  for (const Point& p : candidates) {
    double rho = radius_of(p);
    if (!(rho > 0.0) || !std::isfinite(rho)) continue;
    Circle c(p, rho);
    double res = max_residual(c, cons);
    if (res < best) {
      best = res;
      out = c;
      found = true;
    }
  }
  if (!found) throw GeometryError("no admissible intersection candidate");
  return out;
}

std::vector<Point> upper(std::vector<Point> pts) {
  std::erase_if(pts, [](Point p) { return p.y <= 0.0; });
  return pts;
}

}  // namespace

TwinDuals dual_circles_for_twin(const Arbelos& a, int side,
                                const Tolerance& tol) {
  if (side != 1 && side != 2) throw GeometryError("twin side must be 1 or 2");
  Siblings sib = siblings(a);
  if (side == 1) {
    Point o2p = invert_point(a.O2(), a.inner1(), tol);
    return {circle_through_diameter(a.A1(), o2p, tol), sib.s1, a.O2()};
  }
  Point o1p = invert_point(a.O1(), a.inner2(), tol);
  return {circle_through_diameter(a.A2(), o1p, tol), sib.s2, a.O1()};
}

namespace {

// One twin: pole w.r.t. (O_i) of the upper tangent drawn from the opposite
// center to the sibling on side i.
Construction build_twin(const Arbelos& a, int side, const Tolerance& tol) {
  Siblings sib = siblings(a);
  Circle own = side == 1 ? a.inner1() : a.inner2();
  Circle sibling = side == 1 ? sib.s1 : sib.s2;
  Point from = side == 1 ? a.O2() : a.O1();
  double r_own = side == 1 ? a.r1() : a.r2();
  double r_opp = side == 1 ? a.r2() : a.r1();

  std::array<Point, 2> contacts;
  auto tangents = tangent_lines_from_point(from, sibling, tol, &contacts);
  Line t = tangents[1];  // upper contact
  Point d = pole_of_line(t, own, tol);
  double od = distance(d, own.center);
  double rho = od - r_own;
  Point proj = project_point_on_line(own.center, t);

  Construction c;
  c.name = side == 1 ? "twin_1" : "twin_2";
  c.circle = Circle(d, rho);
  c.expected_radius = a.archimedean_radius();
  c.constraints = {
      circle_constraint(side == 1 ? "inner_1" : "inner_2", own, Contact::External),
      circle_constraint("outer", a.outer(), Contact::Internal),
      line_constraint("tangent_l", a.tangent_line()),
  };
  c.point_witnesses = {{"center_pole", d},
                       {"projection", proj},
                       {"sibling_contact", contacts[1]}};
  double sum = a.r1() + a.r2();
  c.scalar_witnesses = {{"center_distance", od}};
  // Closed forms from the pole construction: O_i D_i and O_i P_i.
  c.identities = {
      {"center_distance", od, r_own * (2.0 * r_opp + r_own) / sum},
      {"projection_distance", distance(proj, own.center),
       r_own * sum / (2.0 * r_opp + r_own)},
      {"pole_inversion", od * distance(proj, own.center), r_own * r_own},
  };
  return c;
}

}  // namespace

std::pair<Construction, Construction> construct_twins(const Arbelos& a,
                                                      const Tolerance& tol) {
  return {build_twin(a, 1, tol), build_twin(a, 2, tol)};
}

Construction construct_icircle(const Arbelos& a, const Tolerance& tol) {
  double R1 = a.r1(), R2 = a.r2(), sum = R1 + R2;
  // Ellipses with axes [O2 A1] and [O1 A2], common focus O.
  Conic ea = ellipse_from_foci(a.O(), a.O1(), 0.5 * (2.0 * R1 + R2), tol);
  Conic eb = ellipse_from_foci(a.O(), a.O2(), 0.5 * (2.0 * R2 + R1), tol);
  auto pts = upper(intersect_shared_focus(ea, eb, a.outer(), tol));

  std::vector<TangencyConstraint> cons = {
      circle_constraint("outer", a.outer(), Contact::Internal),
      circle_constraint("inner_1", a.inner1(), Contact::External),
      circle_constraint("inner_2", a.inner2(), Contact::External),
  };
  Circle ic = pick_candidate(
      pts, [&](Point p) { return sum - distance(p, a.O()); }, cons);

  double od = distance(ic.center, a.O());
  double op = 0.0;
  {
    Line polar = polar_of_point(ic.center, a.outer(), tol);
    op = polar.distance(a.O());
  }
  Construction c;
  c.name = "icircle";
  c.circle = ic;
  c.expected_radius = R1 * R2 * sum / (R1 * R1 + R1 * R2 + R2 * R2);
  c.constraints = std::move(cons);
  c.point_witnesses = {{"center", ic.center}};
  c.scalar_witnesses = {{"OD", od}, {"OP", op}};
  c.identities = {
      {"OP", op, sum * (R1 * R1 + R1 * R2 + R2 * R2) / (R1 * R1 + R2 * R2)},
      {"OD_OP", od * op, sum * sum},
  };
  return c;
}

Construction construct_cousin_icircle(const DoublingArbelos& d,
                                      const Tolerance& tol) {
  const Arbelos& a = d.base;
  double R1 = a.r1(), R2 = a.r2(), sum = R1 + R2;
  Conic ell = ellipse_from_foci(a.A2(), a.O(), 0.5 * (R1 + 3.0 * R2), tol);

  std::vector<Point> pts;
  try {
    Conic hyp = hyperbola_locus(d.big2, d.big1, a.M(), tol);
    pts = upper(intersect_shared_focus(ell, hyp, d.big2, tol));
  } catch (const DegenerateFoci&) {
    // R1 = R2: the hyperbola collapses onto the perpendicular bisector of
    // [A1 A2], the vertical axis through O.
    pts = upper(intersect_conic_line(ell, Line({1.0, 0.0}, 0.0), tol));
  }

  std::vector<TangencyConstraint> cons = {
      circle_constraint("outer", a.outer(), Contact::Internal),
      circle_constraint("big_1", d.big1, Contact::External),
      circle_constraint("big_2", d.big2, Contact::External),
  };
  Circle ic = pick_candidate(
      pts, [&](Point p) { return sum - distance(p, a.O()); }, cons);

  Construction c;
  c.name = "cousin_icircle";
  c.circle = ic;
  c.expected_radius = a.archimedean_radius();
  c.constraints = std::move(cons);
  c.point_witnesses = {{"center", ic.center}};
  c.identities = {
      {"archimedean", ic.radius, a.archimedean_radius()},
  };
  return c;
}

namespace {

Construction build_twin_cousin(const DoublingArbelos& d, int side,
                               const Tolerance& tol) {
  const Arbelos& a = d.base;
  double R_own = side == 1 ? a.r1() : a.r2();
  double R_opp = side == 1 ? a.r2() : a.r1();
  Circle own = side == 1 ? a.inner1() : a.inner2();
  Circle big = side == 1 ? d.big1 : d.big2;
  Point endpoint = side == 1 ? a.A1() : a.A2();

  // E_i: foci O, O_i through A_i; E': foci O_i, A_i through M.
  Conic e1 = ellipse_from_foci(own.center, a.O(), 0.5 * (2.0 * R_own + R_opp), tol);
  Conic ep = ellipse_from_foci(own.center, endpoint, 1.5 * R_own, tol);
  auto pts = upper(intersect_shared_focus(e1, ep, own, tol));

  std::vector<TangencyConstraint> cons = {
      circle_constraint("outer", a.outer(), Contact::Internal),
      circle_constraint(side == 1 ? "big_1" : "big_2", big, Contact::Internal),
      circle_constraint(side == 1 ? "inner_1" : "inner_2", own, Contact::External),
  };
  Circle cc = pick_candidate(
      pts, [&](Point p) { return distance(p, own.center) - R_own; }, cons);

  Construction c;
  c.name = side == 1 ? "twin_cousin_1" : "twin_cousin_2";
  c.circle = cc;
  c.expected_radius = R_own * R_opp / (R_own + 2.0 * R_opp);
  c.constraints = std::move(cons);
  c.point_witnesses = {{"center", cc.center}};
  // The opposite inner circle is measured but not asserted: the prose claim
  // of tangency to it does not hold for the constructed circle.
  Circle opp = side == 1 ? a.inner2() : a.inner1();
  c.scalar_witnesses = {
      {"dist_opposite_inner", distance(cc.center, opp.center)},
      {"dual_radius_R1p", 0.75 * R_own},
      {"dual_gap_O1pO2p",
       R_own * (R_own + 3.0 * R_opp) / (4.0 * (R_own + R_opp))},
  };
  return c;
}

}  // namespace

std::pair<Construction, Construction> construct_twin_cousins(
    const DoublingArbelos& d, const Tolerance& tol) {
  Construction c1 = build_twin_cousin(d, 1, tol);
  Construction c2 = build_twin_cousin(d, 2, tol);
  double R1 = d.base.r1(), R2 = d.base.r2();
  double lhs = 1.0 / c1.circle.radius + 1.0 / c2.circle.radius;
  double rhs = 3.0 * (1.0 / R1 + 1.0 / R2);
  c1.identities.push_back({"cousin_sum", lhs, rhs});
  c2.identities.push_back({"cousin_sum", lhs, rhs});
  return {std::move(c1), std::move(c2)};
}

Construction construct_humble_circle(const Arbelos& a, const Tolerance& tol) {
  double R1 = a.r1(), R2 = a.r2(), sum = R1 + R2;
  // Trapeze sides: height R1 above O1, height R2 above O2; the parallel
  // through M interpolates linearly between them.
  double h = 2.0 * R1 * R2 / sum;
  Point low(a.M().x, 0.0);
  Point high(a.M().x, h);
  Circle hc = circle_through_diameter(low, high, tol);

  Construction c;
  c.name = "humble";
  c.circle = hc;
  c.expected_radius = a.archimedean_radius();
  c.constraints = {line_constraint("base_line", Line({0.0, 1.0}, 0.0))};
  c.point_witnesses = {{"top_1", Point(a.O1().x, R1)},
                       {"top_2", Point(a.O2().x, R2)},
                       {"segment_top", high}};
  c.identities = {{"archimedean", hc.radius, a.archimedean_radius()}};
  return c;
}

VerificationReport verify(const Construction& c, const Tolerance& tol) {
  VerificationReport rep;
  rep.name = c.name;
  rep.center = c.circle.center;
  rep.radius = c.circle.radius;
  rep.expected_radius = c.expected_radius;
  rep.radius_rel_error =
      std::abs(c.circle.radius - c.expected_radius) / std::abs(c.expected_radius);
  rep.passed = rep.radius_rel_error <= tol.rel_eps;
  for (const auto& tc : c.constraints) {
    double res = tc.residual(c.circle);
    rep.constraints.push_back({tc.target_name, contact_name(tc.contact), res});
    if (res > tol.residual_eps) rep.passed = false;
  }
  for (const auto& id : c.identities) {
    double err = std::abs(id.lhs - id.rhs);
    rep.identities.push_back({id.name, id.lhs, id.rhs, err});
    double scale = std::max({1.0, std::abs(id.lhs), std::abs(id.rhs)});
    if (err > tol.residual_eps * scale) rep.passed = false;
  }
  return rep;
}

}  // namespace arbelo
