#include <orbitconics/centers.hpp>
#include <orbitconics/conic_invariants.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace orbitconics {

PoristicShape::PoristicShape(double r, double R) : r_(r), R_(R)
{
  if (!std::isfinite(r) || !std::isfinite(R) || !(r > 0) || !(R > 0)) {
    throw Error(ErrorKind::InvalidShape, "poristic family requires r > 0 and R > 0");
  }
  if (R < 2 * r) {
    if (2 * r - R > 1e-12 * R) {
      throw Error(ErrorKind::InvalidShape, "poristic family requires R >= 2r (Euler)");
    }
    r_ = R / 2;
  }
}

double poristic_closure_residual(const PoristicShape& ps, const Triangle& t)
{
  const Point foot = foot_of_perpendicular(ps.incenter(), t.p2(), t.p3());
  return (foot - ps.incenter()).norm() - ps.r();
}

Triangle poristic_triangle(const PoristicShape& ps, double theta)
{
  const Point incenter = ps.incenter();
  const Point v1 = ps.R() * Point(std::cos(theta), std::sin(theta));
  const Point to_incenter = incenter - v1;
  const double heading = std::atan2(to_incenter.y(), to_incenter.x());
  const double half_angle = std::asin(ps.r() / to_incenter.norm());

  // Second intersection of v1 + s u with the circumcircle: s = -2 v1.u.
  auto chord_end = [&](double angle) -> Point {
    const Point u(std::cos(angle), std::sin(angle));
    return v1 - 2 * v1.dot(u) * u;
  };
  Triangle t(v1, chord_end(heading + half_angle), chord_end(heading - half_angle));
  if (!(std::abs(poristic_closure_residual(ps, t)) <= 1e-9 * ps.R())) {
    throw Error(ErrorKind::ClosureFailure, "poristic triangle does not close on the incircle");
  }
  return t;
}

double poristic_cb_aspect(double rho)
{
  return std::sqrt((rho * rho + 2 * (rho + 1) * std::sqrt(1 - 2 * rho) + 2) /
                   (rho * (rho + 4)));
}

double poristic_cb_aspect(const PoristicShape& ps) { return poristic_cb_aspect(ps.rho()); }

double RectHyperbola::normalized_eval(const Point& p) const
{
  return eval(p) / std::sqrt(c1 * c1 + c2 * c2 + c3 * c3);
}

ShiftedRectHyperbola translate(const RectHyperbola& h, const Point& offset)
{
  const double ox = offset.x(), oy = offset.y();
  return {-h.c1 * ox - h.c2 * oy + h.c3 * ox * oy, h.c1 - h.c3 * oy, h.c2 - h.c3 * ox, h.c3};
}

namespace {

RectHyperbola origin_rect_hyperbola(const Triangle& t)
{
  const double x1 = t.p1().x(), y1 = t.p1().y();
  const double x2 = t.p2().x(), y2 = t.p2().y();
  const double x3 = t.p3().x(), y3 = t.p3().y();
  const double cross23 = x2 * y3 - x3 * y2;
  const double dot23 = x2 * x3 + y2 * y3;

  RectHyperbola h;
  h.c1 = -y2 * y3 * (x2 - x3) * x1 * x1 +
         (x2 * x2 * y3 - x3 * x3 * y2 - y2 * y2 * y3 + y2 * y3 * y3) * x1 * y1 +
         y2 * y3 * (x2 - x3) * y1 * y1 - cross23 * dot23 * y1;
  h.c2 = x2 * x3 * (y2 - y3) * x1 * x1 +
         (x2 * x3 * x3 - x2 * x2 * x3 - x2 * y3 * y3 + x3 * y2 * y2) * x1 * y1 +
         cross23 * dot23 * x1 - x2 * x3 * (y2 - y3) * y1 * y1;
  h.c3 = cross23 * x1 * x1 + (x3 * x3 * y2 - x2 * x2 * y3 + y2 * y2 * y3 - y2 * y3 * y3) * x1 -
         cross23 * y1 * y1 + (x2 * x2 * x3 - x2 * x3 * x3 + x2 * y3 * y3 - x3 * y2 * y2) * y1;

  double scale = 0;
  for (int i = 0; i < 3; ++i) scale = std::max(scale, t[i].cwiseAbs().maxCoeff());
  const double mag = std::abs(h.c1) + std::abs(h.c2) + std::abs(h.c3) * scale;
  if (!(std::abs(h.c3) * scale > 1e-12 * mag)) {
    throw Error(ErrorKind::DegenerateConic, "hyperbola center at infinity");
  }
  if (!(std::abs(h.product_constant()) > 1e-12 * scale * scale)) {
    throw Error(ErrorKind::DegenerateConic, "hyperbola splits into a line pair");
  }
  return h;
}

}  // namespace

RectHyperbola feuerbach_hyperbola(const Triangle& t) { return origin_rect_hyperbola(t); }

RectHyperbola jerabek_excentral(const Triangle& t) { return origin_rect_hyperbola(excentral(t)); }

std::vector<Point> billiard_intersections(const BilliardShape& shape, const RectHyperbola& h,
                                          int samples)
{
  if (samples < 8) throw Error(ErrorKind::InvalidInput, "need at least 8 boundary samples");
  const double step = 2 * std::numbers::pi / samples;
  auto f = [&](double th) { return h.eval(shape.point_at(th)); };

  std::vector<Point> out;
  for (int i = 0; i < samples; ++i) {
    double lo = step * i;
    double hi = step * (i + 1);
    double flo = f(lo);
    const double fhi = f(hi);
    if ((flo > 0) == (fhi > 0)) continue;
    for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
      const double mid = (lo + hi) / 2;
      const double fm = f(mid);
      if ((fm > 0) == (flo > 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    out.push_back(shape.point_at((lo + hi) / 2));
  }
  return out;
}

std::vector<FocalSample> focal_profile(const BilliardShape& shape, std::size_t n)
{
  constexpr double kIsoscelesGuard = 1e-3;
  const double quarter = std::numbers::pi / 2;
  std::vector<FocalSample> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const double t = quarter * static_cast<double>(k) / static_cast<double>(n + 1);
    if (t < kIsoscelesGuard || quarter - t < kIsoscelesGuard) continue;
    const Triangle tri = orbit(shape, t).triangle;
    try {
      out.push_back({t, feuerbach_hyperbola(tri).focal_length(),
                     jerabek_excentral(tri).focal_length()});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateConic) throw;
    }
  }
  return out;
}

std::size_t count_local_maxima(const std::vector<FocalSample>& profile)
{
  std::size_t count = 0;
  for (std::size_t i = 1; i + 1 < profile.size(); ++i) {
    if (profile[i].lambda > profile[i - 1].lambda && profile[i].lambda > profile[i + 1].lambda) {
      ++count;
    }
  }
  return count;
}

double focal_ratio_closed_form(double rho) { return std::sqrt(2 / rho); }

InconicAxes excentral_inconic_axes(const Triangle& t, ExcentralInconic which)
{
  const double R = circumradius(t);
  const double r = inradius(t);
  const double rho = r / R;
  const double d = std::sqrt(std::max(0.0, R * (R - 2 * r)));
  switch (which) {
    case ExcentralInconic::X3Centered:
      return {R + d, R - d, (1 + std::sqrt(1 - 2 * rho)) / rho - 1};
    case ExcentralInconic::MacBeath:
      return {R, std::sqrt(R * R - d * d), 1 / std::sqrt(2 * rho)};
  }
  throw Error(ErrorKind::InvalidInput, "unknown excentral inconic");
}

Point excentral_inconic_center(const Triangle& t, ExcentralInconic which)
{
  const Triangle exc = excentral(t);
  return center(exc, which == ExcentralInconic::X3Centered ? CenterId::X3 : CenterId::X5);
}

}  // namespace orbitconics
