#pragma once

#include <orbitconics/billiard.hpp>
#include <orbitconics/centers.hpp>
#include <orbitconics/kernel.hpp>

#include <optional>
#include <string_view>

namespace orbitconics {

/// The circumellipse centered on the Mittenpunkt, for which the triangle is a
/// billiard 3-periodic.
struct CircumbilliardResult {
  Conic conic;
  EllipseParams params;
  Point mittenpunkt;
  double aspect = 1;
};

CircumbilliardResult circumbilliard(const Triangle& t);

enum class DerivedTriangle { Excentral, Act, Medial, Orthic };

std::string_view to_string(DerivedTriangle d);
std::optional<DerivedTriangle> parse_derived_triangle(std::string_view text);

Triangle derived_triangle(const Triangle& t, DerivedTriangle which);

/// Where the derived triangle's circumbilliard is centered, in terms of the
/// reference: X168, X7, X142, X6* respectively.
CenterId derived_cb_center_id(DerivedTriangle which);

CircumbilliardResult derived_cb(const Triangle& t, DerivedTriangle which);

/// Largest angle (radians) between the conic normal and the internal angle
/// bisector over the triangle's vertices. Zero when the triangle is a
/// billiard trajectory of the conic.
double reflection_law_residual(const Conic& conic, const Triangle& t);

/// Intouch points: feet of the perpendiculars from the incenter to the sides.
std::array<Point, 3> intouch_points(const Triangle& t);

struct IntouchSuperposition {
  /// max |x^2/a^2 + y^2/b^2 - 1| over the ACT intouch points.
  double act_on_billiard = 0;
  /// max |conic_eval| of the 3-periodic intouch points on the medial CB.
  double periodic_on_medial_cb = 0;
};

IntouchSuperposition intouch_superposition_check(const BilliardShape& shape, double t);

}  // namespace orbitconics
