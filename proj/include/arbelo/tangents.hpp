#pragma once

#include <array>
#include <optional>
#include <vector>

#include "arbelo/conic.hpp"
#include "arbelo/geom.hpp"

namespace arbelo {

enum class SimilitudeKind { External, Internal };

struct SimilitudeCenter {
  Point point;
  SimilitudeKind kind;
};

struct SimilitudeCenters {
  std::optional<SimilitudeCenter> external;  // absent when radii are equal
  SimilitudeCenter internal;
};

struct CommonTangent {
  Line line;
  SimilitudeKind kind;
};

struct ConicIntersection {
  Point point;
  int multiplicity = 1;
};

/// Lexicographic (x, y) order used for all deterministic point lists.
bool point_less(Point a, Point b);

/// The two tangent lines from an exterior point, ordered by ascending
/// tangency-point y. tangency_points (when given) receives the contacts.
std::array<Line, 2> tangent_lines_from_point(
    Point p, const Circle& c, const Tolerance& tol = {},
    std::array<Point, 2>* tangency_points = nullptr);

/// All common tangents of two circles (0..4), each labeled by the
/// similitude center it passes through, ordered by normal angle.
std::vector<CommonTangent> common_tangents(const Circle& c1, const Circle& c2,
                                           const Tolerance& tol = {});

SimilitudeCenters similitude_centers(const Circle& c1, const Circle& c2,
                                     const Tolerance& tol = {});

/// Centers of circles tangent to a circle and to a tangent line of it:
/// parabola focused at the circle's center with vertex at the contact point.
Conic parabola_locus(const Circle& c, const Line& l, const Tolerance& tol = {});

/// Centers of circles tangent internally to `outer` and externally to the
/// nested `inner`: ellipse focused at the two centers, through the contact
/// point, semi-major (R + r) / 2. Represented from inner.center.
Conic ellipse_locus(const Circle& outer, const Circle& inner,
                    const Tolerance& tol = {});

/// Centers of circles externally tangent to both circles: hyperbola focused
/// at the centers, branch through `through`. Represented from c1.center.
Conic hyperbola_locus(const Circle& c1, const Circle& c2, Point through,
                      const Tolerance& tol = {});

/// Real intersections of two conics sharing a focus at inv.center: poles of
/// the common tangents of their dual circles, filtered by implicit residual.
std::vector<Point> intersect_shared_focus(const Conic& k1, const Conic& k2,
                                          const Circle& inv,
                                          const Tolerance& tol = {});

/// Real intersections of a conic and a line, ordered by (x, y).
std::vector<Point> intersect_conic_line(const Conic& k, const Line& l,
                                        const Tolerance& tol = {});

/// Independent numeric oracle: intersect two conics via a degenerate member
/// of their pencil, polish roots by Newton iteration on both implicit forms.
/// Near-double roots (within 1e-6) are merged with multiplicity 2.
std::vector<ConicIntersection> intersect_numeric(const Conic& k1,
                                                 const Conic& k2,
                                                 const Tolerance& tol = {});

}  // namespace arbelo
