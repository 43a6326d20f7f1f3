#pragma once

#include <array>
#include <vector>

#include "arbelo/geom.hpp"

namespace arbelo {

enum class ConicKind { Ellipse, Parabola, Hyperbola };

/// Conic in focus-directrix form: {p : |p - focus| = e * dist(p, directrix)}.
/// The implicit quadratic a x^2 + b xy + c y^2 + d x + e y + f = 0 is expanded
/// and cached at construction (coefficients normalized to unit max-norm).
class Conic {
 public:
  Conic(Point focus, Line directrix, double eccentricity,
        const Tolerance& tol = {});

  Point focus() const { return focus_; }
  const Line& directrix() const { return directrix_; }
  double eccentricity() const { return ecc_; }
  ConicKind kind() const { return kind_; }

  /// Cached implicit coefficients (a, b, c, d, e, f), max-norm 1.
  const std::array<double, 6>& implicit_coeffs() const { return coeffs_; }
  double implicit_value(Point p) const;
  Vec implicit_gradient(Point p) const;

  /// | |p - focus| - e * dist(p, directrix) |.
  double focus_directrix_residual(Point p) const;

  /// Vertices on the focal axis: one for a parabola, two otherwise
  /// (for a hyperbola, one per branch). Ordered by distance to the focus.
  std::vector<Point> vertices() const;

  /// Center of a central conic (midpoint of the vertices).
  Point center() const;

  /// Point on the branch nearest the focus, polar angle measured from the
  /// axis ray focus -> directrix. Throws if the radius is not finite there.
  Point point_at(double alpha) const;

  /// Samples spread over the curve: the full ellipse, the near branch of a
  /// parabola, both branches of a hyperbola. At most `count` points.
  std::vector<Point> sample(int count) const;

 private:
  Point focus_;
  Line directrix_;
  double ecc_;
  ConicKind kind_;
  std::array<double, 6> coeffs_{};
};

ConicKind classify(const Conic& k);

/// Ellipse through focus-sum 2*semi_major, represented from `f_primary`.
Conic ellipse_from_foci(Point f_primary, Point f_other, double semi_major,
                        const Tolerance& tol = {});

/// Hyperbola with |d1 - d2| = 2*semi_major, represented from `f_primary`.
Conic hyperbola_from_foci(Point f_primary, Point f_other, double semi_major,
                          const Tolerance& tol = {});

/// Same central conic, focus-directrix data taken at the other focus.
Conic conic_with_other_focus(const Conic& k, const Tolerance& tol = {});

}  // namespace arbelo
