#pragma once

#include <orbitconics/centers.hpp>
#include <orbitconics/kernel.hpp>

#include <optional>
#include <utility>

namespace orbitconics {

/// Elliptic billiard x^2/a^2 + y^2/b^2 = 1 with a > b > 0.
class BilliardShape {
 public:
  BilliardShape(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  /// sqrt(a^4 - a^2 b^2 + b^4)
  double delta() const { return delta_; }
  /// Squared focal half-distance a^2 - b^2.
  double c2() const { return a_ * a_ - b_ * b_; }
  double alpha() const { return a_ / b_; }

  /// x^2/a^2 + y^2/b^2 - 1
  double boundary_residual(const Point& p) const;
  Point point_at(double t) const;
  /// Outward normal direction (not normalized).
  Point normal_at(const Point& p) const;
  /// Billiard boundary as a normalized conic (c4 = -1/a^2, c5 = -1/b^2).
  Conic conic() const;

 private:
  double a_;
  double b_;
  double delta_;
};

struct OrbitSample {
  double t;
  Triangle triangle;
  ShapeClass shape_class;
};

/// 3-periodic with P1 = (a cos t, b sin t). P2 and P3 are the second
/// intersections of the two tangents from P1 to the confocal caustic.
OrbitSample orbit(const BilliardShape& shape, double t);

ShapeClass classify_orbit(const BilliardShape& shape, double t);

/// sqrt(2 sqrt(2) - 1): above this aspect ratio the family contains obtuse
/// triangles.
double threshold_alpha4();
/// sqrt(4 sqrt(3) - 3): the aspect ratio at which the orthic of the upright
/// isosceles 3-periodic is equilateral.
double threshold_alpha_eq();

/// Caustic semi-axes a(delta - b^2)/c^2 and b(a^2 - delta)/c^2.
EllipseParams caustic(const BilliardShape& shape);

/// Inradius over circumradius, 2(delta - b^2)(a^2 - delta)/c^4.
double rho(const BilliardShape& shape);
/// Scale of the X7 locus relative to the billiard, (2 delta - a^2 - b^2)/c^2.
double gergonne_locus_scale(const BilliardShape& shape);
/// Semi-axes of the excenter locus: ((b^2 + delta)/a, (a^2 + delta)/b).
std::pair<double, double> excenter_locus_axes(const BilliardShape& shape);

/// First-quadrant vertex position (x, y) that makes the 3-periodic a right
/// triangle; empty when a/b < alpha4.
std::optional<Point> right_angle_vertex(const BilliardShape& shape);

/// c^8 x^4 - 2 a^4 c^2 (a^4 + 3 b^4) x^2 + a^8 (a^4 + 2 a^2 b^2 - 7 b^4)
double right_angle_quartic(const BilliardShape& shape, double x);

/// Explicit polynomial companions P2, P3 of a right-angle vertex P1. Only
/// valid when P1 is one of the four right-angle vertex positions.
std::pair<Point, Point> right_vertex_companions(const BilliardShape& shape, const Point& p1);

/// True when p lies on the open top/bottom arcs between the right-angle
/// vertex positions (a 3-periodic with a vertex there is obtuse).
bool on_obtuse_arc(const BilliardShape& shape, const Point& p);

/// Where the orthic circumbilliard center locus switches branches: the
/// orthic center of the right-triangle 3-periodic (midpoint of the altitude
/// from the right-angle vertex). Empty when a/b < alpha4.
std::optional<Point> orthic_transition_point(const BilliardShape& shape);

struct IsoscelesDimensions {
  double s_eq = 0;  // base half-width
  double h = 0;     // height
};

/// Upright isosceles 3-periodic (P1 = (0, b)) dimensions, normalized to b = 1.
IsoscelesDimensions isosceles_dimensions(const BilliardShape& shape);

}  // namespace orbitconics
