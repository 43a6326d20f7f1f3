#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arbelo/conic.hpp"
#include "arbelo/geom.hpp"

namespace arbelo {

/// Canonical arbelos frame: outer circle centered at the origin, inner
/// circles on the x axis, common internal tangent the vertical line
/// through M.
class Arbelos {
 public:
  Arbelos(double R1, double R2);

  double r1() const { return r1_; }
  double r2() const { return r2_; }

  Point O() const { return {}; }
  Point O1() const { return {-r2_, 0.0}; }
  Point O2() const { return {r1_, 0.0}; }
  Point A1() const { return {-(r1_ + r2_), 0.0}; }
  Point A2() const { return {r1_ + r2_, 0.0}; }
  Point M() const { return {r1_ - r2_, 0.0}; }

  Circle outer() const { return {O(), r1_ + r2_}; }
  Circle inner1() const { return {O1(), r1_}; }
  Circle inner2() const { return {O2(), r2_}; }
  /// Common internal tangent l: x = R1 - R2.
  Line tangent_line() const { return Line({1.0, 0.0}, r1_ - r2_); }

  /// Harmonic twin radius R1 R2 / (R1 + R2).
  double archimedean_radius() const { return r1_ * r2_ / (r1_ + r2_); }

 private:
  double r1_;
  double r2_;
};

Arbelos make_arbelos(double R1, double R2);

/// Circles on diameters [O1, M] and [O2, M]; radii R1/2, R2/2.
struct Siblings {
  Circle s1;
  Circle s2;
};

Siblings siblings(const Arbelos& a);

/// Arbelos augmented with circles centered at A1, A2 through M.
struct DoublingArbelos {
  Arbelos base;
  Circle big1;
  Circle big2;
};

DoublingArbelos make_doubling_arbelos(const Arbelos& a);

struct TangencyConstraint {
  enum class Contact { Internal, External, LineTangent };

  std::string target_name;
  std::variant<Circle, Line> target;
  Contact contact;

  /// Tangency residual of `c` against the target under this contact type.
  double residual(const Circle& c) const;
};

const char* contact_name(TangencyConstraint::Contact k);

struct Identity {
  std::string name;
  double lhs;
  double rhs;
};

/// A named result circle with the tangencies it must satisfy, the
/// closed-form radius it should have, and named intermediates of the
/// construction.
struct Construction {
  std::string name;
  Circle circle;
  std::vector<TangencyConstraint> constraints;
  double expected_radius;
  std::map<std::string, Point> point_witnesses;
  std::map<std::string, double> scalar_witnesses;
  std::vector<Identity> identities;
};

struct ConstraintResult {
  std::string target;
  std::string kind;
  double residual;
};

struct IdentityResult {
  std::string name;
  double lhs;
  double rhs;
  double abs_error;
};

struct VerificationReport {
  std::string name;
  Point center;
  double radius = 0.0;
  double expected_radius = 0.0;
  double radius_rel_error = 0.0;
  std::vector<ConstraintResult> constraints;
  std::vector<IdentityResult> identities;
  bool passed = true;
};

/// Dual circles behind one twin: the ellipse and parabola reciprocals
/// w.r.t. the inversion circle on that side, and their similitude point.
struct TwinDuals {
  Circle ellipse_dual;
  Circle parabola_dual;
  Point similitude;
};

TwinDuals dual_circles_for_twin(const Arbelos& a, int side,
                                const Tolerance& tol = {});

/// The classic twins, built as poles of the sibling tangents.
std::pair<Construction, Construction> construct_twins(const Arbelos& a,
                                                      const Tolerance& tol = {});

/// Inscribed circle of the arbelos via shared-focus ellipse intersection.
Construction construct_icircle(const Arbelos& a, const Tolerance& tol = {});

/// The i-circle of a doubling arbelos (ellipse x hyperbola, duals w.r.t.
/// the circle at A2; perpendicular-bisector fallback when R1 = R2).
Construction construct_cousin_icircle(const DoublingArbelos& d,
                                      const Tolerance& tol = {});

/// The non-congruent pair of circles with 1/s1 + 1/s2 = 3(1/R1 + 1/R2).
std::pair<Construction, Construction> construct_twin_cousins(
    const DoublingArbelos& d, const Tolerance& tol = {});

/// Circle on the trapeze mid-segment through M; Archimedean.
Construction construct_humble_circle(const Arbelos& a,
                                     const Tolerance& tol = {});

/// Evaluates every constraint residual and identity. Never throws;
/// failures are reported in the result.
VerificationReport verify(const Construction& c, const Tolerance& tol = {});

}  // namespace arbelo
