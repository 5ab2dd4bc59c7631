#include <orbitconics/billiard.hpp>

#include <cmath>
#include <numbers>

namespace orbitconics {

BilliardShape::BilliardShape(double a, double b) : a_(a), b_(b)
{
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > 0) || !(a > b)) {
    throw Error(ErrorKind::InvalidShape, "billiard requires a > b > 0");
  }
  delta_ = std::sqrt(a * a * a * a - a * a * b * b + b * b * b * b);
}

double BilliardShape::boundary_residual(const Point& p) const
{
  const double u = p.x() / a_;
  const double v = p.y() / b_;
  return u * u + v * v - 1;
}

Point BilliardShape::point_at(double t) const { return {a_ * std::cos(t), b_ * std::sin(t)}; }

Point BilliardShape::normal_at(const Point& p) const
{
  return {p.x() / (a_ * a_), p.y() / (b_ * b_)};
}

Conic BilliardShape::conic() const
{
  return Conic(0, 0, 0, -1 / (a_ * a_), -1 / (b_ * b_));
}

EllipseParams caustic(const BilliardShape& shape)
{
  const double a = shape.a(), b = shape.b(), d = shape.delta(), c2 = shape.c2();
  EllipseParams e;
  e.semi_major = a * (d - b * b) / c2;
  e.semi_minor = b * (a * a - d) / c2;
  return e;
}

OrbitSample orbit(const BilliardShape& shape, double t)
{
  const EllipseParams cst = caustic(shape);
  const double ac = cst.semi_major;
  const double bc = cst.semi_minor;
  const double a = shape.a(), b = shape.b();

  const Point p1 = shape.point_at(t);
  // Contact angle u of a caustic tangent through p1 solves
  // (x/ac) cos u + (y/bc) sin u = 1.
  const double ka = p1.x() / ac;
  const double kb = p1.y() / bc;
  const double phase = std::atan2(kb, ka);
  const double spread = std::acos(1 / std::hypot(ka, kb));

  auto second_hit = [&](double u) -> Point {
    const Point q(ac * std::cos(u), bc * std::sin(u));
    const Point v = q - p1;
    const double qa = v.x() * v.x() / (a * a) + v.y() * v.y() / (b * b);
    const double qb = 2 * (p1.x() * v.x() / (a * a) + p1.y() * v.y() / (b * b));
    return p1 - (qb / qa) * v;
  };

  Triangle tri(p1, second_hit(phase + spread), second_hit(phase - spread));
  const ShapeClass cls = classify_triangle(tri);
  return {t, tri, cls};
}

ShapeClass classify_orbit(const BilliardShape& shape, double t)
{
  return orbit(shape, t).shape_class;
}

double threshold_alpha4() { return std::sqrt(2 * std::numbers::sqrt2 - 1); }

double threshold_alpha_eq() { return std::sqrt(4 * std::numbers::sqrt3 - 3); }

double rho(const BilliardShape& shape)
{
  const double a = shape.a(), b = shape.b(), d = shape.delta(), c2 = shape.c2();
  return 2 * (d - b * b) * (a * a - d) / (c2 * c2);
}

double gergonne_locus_scale(const BilliardShape& shape)
{
  const double a = shape.a(), b = shape.b();
  return (2 * shape.delta() - a * a - b * b) / shape.c2();
}

std::pair<double, double> excenter_locus_axes(const BilliardShape& shape)
{
  const double a = shape.a(), b = shape.b(), d = shape.delta();
  return {(b * b + d) / a, (a * a + d) / b};
}

std::optional<Point> right_angle_vertex(const BilliardShape& shape)
{
  const double a = shape.a(), b = shape.b(), d = shape.delta();
  const double a2 = a * a, b2 = b * b;
  const double rx = a2 * a2 + 3 * b2 * b2 - 4 * b2 * d;
  const double ry = -b2 * b2 - 3 * a2 * a2 + 4 * a2 * d;
  if (rx < 0 || ry < 0) return std::nullopt;
  const double c3 = std::pow(shape.c2(), 1.5);
  return Point(a2 * std::sqrt(rx) / c3, b2 * std::sqrt(ry) / c3);
}

double right_angle_quartic(const BilliardShape& shape, double x)
{
  const double a2 = shape.a() * shape.a();
  const double b2 = shape.b() * shape.b();
  const double a4 = a2 * a2, b4 = b2 * b2;
  const double c2 = shape.c2();
  const double c8 = c2 * c2 * c2 * c2;
  const double x2 = x * x;
  return c8 * x2 * x2 - 2 * a4 * c2 * (a4 + 3 * b4) * x2 + a4 * a4 * (a4 + 2 * a2 * b2 - 7 * b4);
}

std::pair<Point, Point> right_vertex_companions(const BilliardShape& shape, const Point& p1)
{
  const double a2 = shape.a() * shape.a();
  const double b2 = shape.b() * shape.b();
  const double a4 = a2 * a2, b4 = b2 * b2;
  const double a6 = a4 * a2, b6 = b4 * b2;
  const double c2 = shape.c2();
  const double x = p1.x(), y = p1.y();
  const double x2 = x * x, y2 = y * y, x3 = x2 * x, y3 = y2 * y;

  const double p2x = b4 * c2 * x3 - 2 * a4 * b2 * x2 * y + a4 * c2 * x * y2 - 2 * a6 * y3;
  const double p2y = 2 * b6 * x3 - b4 * c2 * x2 * y + 2 * a2 * b4 * x * y2 - a4 * c2 * y3;
  const double q2 = b4 * (a2 + b2) * x2 - 2 * a2 * b2 * c2 * x * y + a4 * (a2 + b2) * y2;
  // P3 mirrors P2 across the x-axis: P3(x, y) = reflect(P2(x, -y)).
  const double p3x = b4 * c2 * x3 + 2 * a4 * b2 * x2 * y + a4 * c2 * x * y2 + 2 * a6 * y3;
  const double p3y = -2 * b6 * x3 - b4 * c2 * x2 * y - 2 * a2 * b4 * x * y2 - a4 * c2 * y3;
  const double q3 = b4 * (a2 + b2) * x2 + 2 * a2 * b2 * c2 * x * y + a4 * (a2 + b2) * y2;
  return {Point(p2x / q2, p2y / q2), Point(p3x / q3, p3y / q3)};
}

bool on_obtuse_arc(const BilliardShape& shape, const Point& p)
{
  const auto perp = right_angle_vertex(shape);
  if (!perp) return false;
  return std::abs(p.x()) < perp->x() * (1 - 1e-12);
}

std::optional<Point> orthic_transition_point(const BilliardShape& shape)
{
  const auto perp = right_angle_vertex(shape);
  if (!perp) return std::nullopt;
  const double t = std::atan2(perp->y() / shape.b(), perp->x() / shape.a());
  const Triangle tri = orbit(shape, t).triangle;
  const Point& apex = tri.p1();
  return (apex + foot_of_perpendicular(apex, tri.p2(), tri.p3())) / 2;
}

IsoscelesDimensions isosceles_dimensions(const BilliardShape& shape)
{
  const double al2 = shape.alpha() * shape.alpha();
  const double d = shape.delta() / (shape.b() * shape.b());
  return {al2 / (al2 - 1) * std::sqrt(2 * d - al2 - 1), (al2 + d + 1) / (al2 + d)};
}

}  // namespace orbitconics
