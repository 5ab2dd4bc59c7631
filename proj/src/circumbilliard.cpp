#include <orbitconics/circumbilliard.hpp>

#include <algorithm>
#include <cmath>

namespace orbitconics {

CircumbilliardResult circumbilliard(const Triangle& t)
{
  CircumbilliardResult out;
  out.mittenpunkt = center(t, CenterId::X9);
  out.conic = solve_circumconic(t, out.mittenpunkt);
  out.params = conic_to_ellipse_params(out.conic);
  out.aspect = out.params.aspect();
  return out;
}

std::string_view to_string(DerivedTriangle d)
{
  switch (d) {
    case DerivedTriangle::Excentral: return "excentral";
    case DerivedTriangle::Act: return "act";
    case DerivedTriangle::Medial: return "medial";
    case DerivedTriangle::Orthic: return "orthic";
  }
  return "unknown";
}

std::optional<DerivedTriangle> parse_derived_triangle(std::string_view text)
{
  for (auto d : {DerivedTriangle::Excentral, DerivedTriangle::Act, DerivedTriangle::Medial,
                 DerivedTriangle::Orthic}) {
    if (text == to_string(d)) return d;
  }
  return std::nullopt;
}

Triangle derived_triangle(const Triangle& t, DerivedTriangle which)
{
  switch (which) {
    case DerivedTriangle::Excentral: return excentral(t);
    case DerivedTriangle::Act: return act(t);
    case DerivedTriangle::Medial: return medial(t);
    case DerivedTriangle::Orthic: return orthic(t);
  }
  throw Error(ErrorKind::InvalidInput, "unknown derived triangle");
}

CenterId derived_cb_center_id(DerivedTriangle which)
{
  switch (which) {
    case DerivedTriangle::Excentral: return CenterId::X168;
    case DerivedTriangle::Act: return CenterId::X7;
    case DerivedTriangle::Medial: return CenterId::X142;
    case DerivedTriangle::Orthic: return CenterId::X6Star;
  }
  throw Error(ErrorKind::InvalidInput, "unknown derived triangle");
}

CircumbilliardResult derived_cb(const Triangle& t, DerivedTriangle which)
{
  return circumbilliard(derived_triangle(t, which));
}

double reflection_law_residual(const Conic& conic, const Triangle& t)
{
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    const Point& p = t[i];
    const Point bisector =
        (t[(i + 1) % 3] - p).normalized() + (t[(i + 2) % 3] - p).normalized();
    const Point normal = conic.gradient(p);
    const double cross = bisector.x() * normal.y() - bisector.y() * normal.x();
    // Angle between the two lines, independent of orientation.
    const double angle = std::atan2(std::abs(cross), std::abs(bisector.dot(normal)));
    worst = std::max(worst, angle);
  }
  return worst;
}

std::array<Point, 3> intouch_points(const Triangle& t)
{
  const Point incenter = center(t, CenterId::X1);
  return {foot_of_perpendicular(incenter, t.p2(), t.p3()),
          foot_of_perpendicular(incenter, t.p3(), t.p1()),
          foot_of_perpendicular(incenter, t.p1(), t.p2())};
}

IntouchSuperposition intouch_superposition_check(const BilliardShape& shape, double t)
{
  const Triangle tri = orbit(shape, t).triangle;
  IntouchSuperposition out;
  for (const Point& p : intouch_points(act(tri))) {
    out.act_on_billiard = std::max(out.act_on_billiard, std::abs(shape.boundary_residual(p)));
  }
  const Conic medial_cb = circumbilliard(medial(tri)).conic;
  for (const Point& p : intouch_points(tri)) {
    out.periodic_on_medial_cb =
        std::max(out.periodic_on_medial_cb, std::abs(conic_eval(medial_cb, p)));
  }
  return out;
}

}  // namespace orbitconics
