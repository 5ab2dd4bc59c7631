#include <orbitconics/centers.hpp>

#include <charconv>
#include <cmath>

namespace orbitconics {

namespace {

constexpr double kRightDeadBand = 1e-12;

Trilinears cyclic(const Triangle& t, auto&& f)
{
  const double s1 = t.s1(), s2 = t.s2(), s3 = t.s3();
  return {f(s1, s2, s3), f(s2, s3, s1), f(s3, s1, s2)};
}

}  // namespace

std::optional<CenterId> parse_center_id(std::string_view text)
{
  if (text.size() < 2 || (text[0] != 'X' && text[0] != 'x')) return std::nullopt;
  const std::string_view rest = text.substr(1);
  if (rest == "6star" || rest == "6*") return CenterId::X6Star;
  int index = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
  if (ec != std::errc{} || ptr != rest.data() + rest.size()) return std::nullopt;
  for (CenterId id : all_center_ids) {
    if (static_cast<int>(id) == index) return id;
  }
  return std::nullopt;
}

std::string to_string(CenterId id)
{
  if (id == CenterId::X6Star) return "X6star";
  return "X" + std::to_string(static_cast<int>(id));
}

std::string_view to_string(ShapeClass c)
{
  switch (c) {
    case ShapeClass::Acute: return "acute";
    case ShapeClass::Right: return "right";
    case ShapeClass::Obtuse: return "obtuse";
  }
  return "unknown";
}

Point trilinear_to_cartesian(const Triangle& t, const Trilinears& tri)
{
  const double w1 = t.s1() * tri.t1;
  const double w2 = t.s2() * tri.t2;
  const double w3 = t.s3() * tri.t3;
  const double sum = w1 + w2 + w3;
  const double mag = std::abs(w1) + std::abs(w2) + std::abs(w3);
  if (!std::isfinite(sum) || !(std::abs(sum) > 1e-14 * mag)) {
    throw Error(ErrorKind::PointAtInfinity, "trilinear point lies at infinity");
  }
  return (w1 * t.p1() + w2 * t.p2() + w3 * t.p3()) / sum;
}

std::array<double, 3> vertex_cosines(const Triangle& t)
{
  const double s1 = t.s1(), s2 = t.s2(), s3 = t.s3();
  return {(s2 * s2 + s3 * s3 - s1 * s1) / (2 * s2 * s3),
          (s3 * s3 + s1 * s1 - s2 * s2) / (2 * s3 * s1),
          (s1 * s1 + s2 * s2 - s3 * s3) / (2 * s1 * s2)};
}

int widest_vertex(const Triangle& t)
{
  const auto cs = vertex_cosines(t);
  int i = 0;
  if (cs[1] < cs[i]) i = 1;
  if (cs[2] < cs[i]) i = 2;
  return i;
}

ShapeClass classify_triangle(const Triangle& t)
{
  const double c = vertex_cosines(t)[static_cast<std::size_t>(widest_vertex(t))];
  if (c < -kRightDeadBand) return ShapeClass::Obtuse;
  if (c > kRightDeadBand) return ShapeClass::Acute;
  return ShapeClass::Right;
}

double inradius(const Triangle& t) { return 2 * t.area() / t.perimeter(); }

double circumradius(const Triangle& t) { return t.s1() * t.s2() * t.s3() / (4 * t.area()); }

bool is_far_field(const Triangle& t, const Point& p)
{
  const Point g = (t.p1() + t.p2() + t.p3()) / 3;
  return (p - g).norm() > 1e6 * t.longest_side();
}

Point center(const Triangle& t, CenterId id)
{
  switch (id) {
    case CenterId::X1:
      return trilinear_to_cartesian(t, {1, 1, 1});
    case CenterId::X2:
      return trilinear_to_cartesian(t, cyclic(t, [](double a, double, double) { return 1 / a; }));
    case CenterId::X3: {
      const auto cs = vertex_cosines(t);
      return trilinear_to_cartesian(t, {cs[0], cs[1], cs[2]});
    }
    case CenterId::X4: {
      const auto cs = vertex_cosines(t);
      if (cs[0] == 0 || cs[1] == 0 || cs[2] == 0) {
        throw Error(ErrorKind::UndefinedForShape, "X4 undefined for an exactly right triangle");
      }
      return trilinear_to_cartesian(t, {1 / cs[0], 1 / cs[1], 1 / cs[2]});
    }
    case CenterId::X5:
      return (center(t, CenterId::X3) + center(t, CenterId::X4)) / 2;
    case CenterId::X6:
      return trilinear_to_cartesian(t, {t.s1(), t.s2(), t.s3()});
    case CenterId::X7:
      return trilinear_to_cartesian(
          t, cyclic(t, [](double a, double b, double c) { return 1 / (a * (b + c - a)); }));
    case CenterId::X8:
      return trilinear_to_cartesian(
          t, cyclic(t, [](double a, double b, double c) { return (b + c - a) / a; }));
    case CenterId::X9:
      return trilinear_to_cartesian(
          t, cyclic(t, [](double a, double b, double c) { return b + c - a; }));
    case CenterId::X10:
      return trilinear_to_cartesian(
          t, cyclic(t, [](double a, double b, double c) { return (b + c) / a; }));
    case CenterId::X11:
      return trilinear_to_cartesian(t, cyclic(t, [](double a, double b, double c) {
                                      return (b + c - a) * (b - c) * (b - c) / a;
                                    }));
    case CenterId::X40:
      return center(excentral(t), CenterId::X3);
    case CenterId::X69:
      return trilinear_to_cartesian(
          t, cyclic(t, [](double a, double b, double c) { return (b * b + c * c - a * a) / a; }));
    case CenterId::X100:
      return 2 * center(t, CenterId::X9) - center(t, CenterId::X1156);
    case CenterId::X142:
      return (center(t, CenterId::X9) + center(t, CenterId::X7)) / 2;
    case CenterId::X144:
      // anticomplement of X7: 3 X2 - 2 X7
      return 3 * center(t, CenterId::X2) - 2 * center(t, CenterId::X7);
    case CenterId::X168:
      return center(excentral(t), CenterId::X9);
    case CenterId::X1156:
      return trilinear_to_cartesian(t, cyclic(t, [](double a, double b, double c) {
                                      return 1 / ((b - c) * (b - c) + a * (b + c - 2 * a));
                                    }));
    case CenterId::X6Star:
      return orthic_cb_center(t).point;
  }
  throw Error(ErrorKind::InvalidInput, "unsupported center id");
}

Triangle excentral(const Triangle& t)
{
  const double s1 = t.s1(), s2 = t.s2(), s3 = t.s3();
  const Point& p1 = t.p1();
  const Point& p2 = t.p2();
  const Point& p3 = t.p3();
  return Triangle((-s1 * p1 + s2 * p2 + s3 * p3) / (s2 + s3 - s1),
                  (s1 * p1 - s2 * p2 + s3 * p3) / (s3 + s1 - s2),
                  (s1 * p1 + s2 * p2 - s3 * p3) / (s1 + s2 - s3));
}

Triangle medial(const Triangle& t)
{
  return Triangle((t.p2() + t.p3()) / 2, (t.p3() + t.p1()) / 2, (t.p1() + t.p2()) / 2);
}

Triangle act(const Triangle& t)
{
  return Triangle(t.p2() + t.p3() - t.p1(), t.p3() + t.p1() - t.p2(), t.p1() + t.p2() - t.p3());
}

Point foot_of_perpendicular(const Point& p, const Point& a, const Point& b)
{
  const Point u = b - a;
  return a + (p - a).dot(u) / u.squaredNorm() * u;
}

Triangle orthic(const Triangle& t)
{
  if (classify_triangle(t) == ShapeClass::Right) {
    throw Error(ErrorKind::RightTriangle, "orthic of a right triangle degenerates to a segment");
  }
  return Triangle(foot_of_perpendicular(t.p1(), t.p2(), t.p3()),
                  foot_of_perpendicular(t.p2(), t.p3(), t.p1()),
                  foot_of_perpendicular(t.p3(), t.p1(), t.p2()));
}

OrthicCenter orthic_cb_center(const Triangle& t)
{
  const int i = widest_vertex(t);
  const Point& apex = t[i];
  const Point& pj = t[(i + 1) % 3];
  const Point& pk = t[(i + 2) % 3];
  switch (classify_triangle(t)) {
    case ShapeClass::Acute:
      return {center(t, CenterId::X6), false};
    case ShapeClass::Obtuse:
      return {center(Triangle(pj, pk, center(t, CenterId::X4)), CenterId::X6), false};
    case ShapeClass::Right:
      break;
  }
  // X6 of a right triangle is the midpoint of the right-angle vertex altitude.
  return {(apex + foot_of_perpendicular(apex, pj, pk)) / 2, true};
}

}  // namespace orbitconics
