#pragma once

#include "arbelo/conic.hpp"
#include "arbelo/geom.hpp"

namespace arbelo {

/// Pole of a line: the inverse of the projection of the inversion center.
Point pole_of_line(const Line& l, const Circle& inv, const Tolerance& tol = {});

/// Polar of a point: perpendicular to center->p through the inverse of p.
Line polar_of_point(Point p, const Circle& inv, const Tolerance& tol = {});

/// Polar dual of a circle w.r.t. an inversion circle: a conic with focus at
/// the inversion center, directrix the polar of the circle's center, and
/// eccentricity r/d.
Conic dual_of_circle(const Circle& c, const Circle& inv,
                     const Tolerance& tol = {});

/// Polar dual of a conic w.r.t. an inversion circle centered at its focus:
/// the circle whose diameter endpoints are the inverses of the vertices
/// (for a parabola, the inversion center stands in for the vertex at
/// infinity).
Circle dual_of_conic(const Conic& k, const Circle& inv,
                     const Tolerance& tol = {});

}  // namespace arbelo
