#pragma once

// Planar conic algebra. Everything here is templated on the scalar type and
// header-only; the rest of the library uses the double aliases at the bottom.
//
// Conics use the normalized five-coefficient form
//
//     1 + c1 x + c2 y + c3 xy + c4 x^2 + c5 y^2 = 0
//
// which cannot represent conics through the origin.

#include <orbitconics/error.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace orbitconics {

template <typename Scalar>
using BasicPoint = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
struct BasicConic {
  Eigen::Matrix<Scalar, 5, 1> c = Eigen::Matrix<Scalar, 5, 1>::Zero();

  BasicConic() = default;
  explicit BasicConic(const Eigen::Matrix<Scalar, 5, 1>& coeffs) : c(coeffs) {}
  BasicConic(Scalar c1, Scalar c2, Scalar c3, Scalar c4, Scalar c5)
  {
    c << c1, c2, c3, c4, c5;
  }

  Scalar c1() const { return c(0); }
  Scalar c2() const { return c(1); }
  Scalar c3() const { return c(2); }
  Scalar c4() const { return c(3); }
  Scalar c5() const { return c(4); }

  /// Symmetric 3x3 matrix of the homogeneous form [x y 1] M [x y 1]^T.
  Eigen::Matrix<Scalar, 3, 3> matrix() const
  {
    Eigen::Matrix<Scalar, 3, 3> m;
    m << c4(), c3() / 2, c1() / 2,
         c3() / 2, c5(), c2() / 2,
         c1() / 2, c2() / 2, Scalar(1);
    return m;
  }

  /// Hessian of the conic polynomial; depends only on the quadratic part.
  Eigen::Matrix<Scalar, 2, 2> hessian() const
  {
    Eigen::Matrix<Scalar, 2, 2> h;
    h << 2 * c4(), c3(), c3(), 2 * c5();
    return h;
  }

  BasicPoint<Scalar> gradient(const BasicPoint<Scalar>& p) const
  {
    return {c1() + c3() * p.y() + 2 * c4() * p.x(),
            c2() + c3() * p.x() + 2 * c5() * p.y()};
  }

  /// Magnitude used to turn residuals into scale-relative quantities.
  Scalar scale() const { return Scalar(1) + c.norm(); }
};

template <typename Scalar>
struct BasicEllipseParams {
  BasicPoint<Scalar> center = BasicPoint<Scalar>::Zero();
  Scalar semi_major = 0;
  Scalar semi_minor = 0;
  Scalar axis_angle = 0;  // direction of the major axis, in [0, pi)

  Scalar aspect() const { return semi_major / semi_minor; }

  BasicPoint<Scalar> major_direction() const
  {
    return {std::cos(axis_angle), std::sin(axis_angle)};
  }
  BasicPoint<Scalar> minor_direction() const
  {
    return {-std::sin(axis_angle), std::cos(axis_angle)};
  }
};

enum class ConicClass { Ellipse, Hyperbola, Parabola, Degenerate };

/// Three vertices with cached sidelengths. side(i) is the length of the side
/// opposite vertex i, i.e. s1 = |P2 - P3|.
template <typename Scalar>
class BasicTriangle {
 public:
  using Point = BasicPoint<Scalar>;

  static constexpr Scalar degeneracy_tolerance = Scalar(1e-12);

  BasicTriangle(const Point& p1, const Point& p2, const Point& p3) : v_{p1, p2, p3}
  {
    for (const auto& p : v_) {
      if (!p.allFinite()) {
        throw Error(ErrorKind::InvalidInput, "triangle vertex is not finite");
      }
    }
    s_ = {(p2 - p3).norm(), (p1 - p3).norm(), (p1 - p2).norm()};
    const Scalar longest = std::max({s_[0], s_[1], s_[2]});
    if (!(std::abs(signed_area()) >= degeneracy_tolerance * longest * longest) ||
        longest == Scalar(0)) {
      throw Error(ErrorKind::DegenerateTriangle, "triangle area below degeneracy tolerance");
    }
  }

  const Point& vertex(int i) const { return v_[static_cast<std::size_t>(i)]; }
  const Point& operator[](int i) const { return vertex(i); }
  const Point& p1() const { return v_[0]; }
  const Point& p2() const { return v_[1]; }
  const Point& p3() const { return v_[2]; }

  Scalar side(int i) const { return s_[static_cast<std::size_t>(i)]; }
  Scalar s1() const { return s_[0]; }
  Scalar s2() const { return s_[1]; }
  Scalar s3() const { return s_[2]; }

  Scalar perimeter() const { return s_[0] + s_[1] + s_[2]; }
  Scalar longest_side() const { return std::max({s_[0], s_[1], s_[2]}); }

  Scalar signed_area() const
  {
    const Point u = v_[1] - v_[0];
    const Point w = v_[2] - v_[0];
    return (u.x() * w.y() - u.y() * w.x()) / 2;
  }
  Scalar area() const { return std::abs(signed_area()); }

 private:
  std::array<Point, 3> v_;
  std::array<Scalar, 3> s_{};
};

template <typename Scalar>
Scalar conic_eval(const BasicConic<Scalar>& conic, const BasicPoint<Scalar>& p)
{
  const Scalar x = p.x();
  const Scalar y = p.y();
  return 1 + conic.c1() * x + conic.c2() * y + conic.c3() * x * y + conic.c4() * x * x +
         conic.c5() * y * y;
}

namespace detail {

template <typename Scalar>
constexpr Scalar max_pivot_ratio = Scalar(1e12);

}  // namespace detail

/// Circumconic through the triangle's vertices whose center is `center`:
/// the conic vanishes at the three vertices and its gradient vanishes at the
/// center, which gives a 5x5 linear system in c1..c5.
template <typename Scalar>
BasicConic<Scalar> solve_circumconic(const BasicTriangle<Scalar>& t,
                                     const BasicPoint<Scalar>& center)
{
  Eigen::Matrix<Scalar, 5, 5> m;
  Eigen::Matrix<Scalar, 5, 1> rhs;
  for (int i = 0; i < 3; ++i) {
    const Scalar x = t[i].x();
    const Scalar y = t[i].y();
    m.row(i) << x, y, x * y, x * x, y * y;
    rhs(i) = -1;
  }
  const Scalar xm = center.x();
  const Scalar ym = center.y();
  m.row(3) << 1, 0, ym, 2 * xm, 0;
  m.row(4) << 0, 1, xm, 0, 2 * ym;
  rhs(3) = 0;
  rhs(4) = 0;

  const Eigen::PartialPivLU<Eigen::Matrix<Scalar, 5, 5>> lu(m);
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  const Scalar pmin = pivots.minCoeff();
  const Scalar pmax = pivots.maxCoeff();
  if (!(pmin > 0) || pmax / pmin > detail::max_pivot_ratio<Scalar>) {
    throw Error(ErrorKind::SingularSystem, "circumconic system is singular");
  }
  const Eigen::Matrix<Scalar, 5, 1> c = lu.solve(rhs);
  if (!c.allFinite()) {
    throw Error(ErrorKind::SingularSystem, "circumconic solution is not finite");
  }
  return BasicConic<Scalar>(c);
}

template <typename Scalar>
ConicClass classify_conic(const BasicConic<Scalar>& conic)
{
  const Scalar tol = Scalar(1e-12);
  const Eigen::Matrix<Scalar, 3, 3> m = conic.matrix();
  const Scalar mnorm = m.cwiseAbs().maxCoeff();
  if (std::abs(m.determinant()) <= tol * mnorm * mnorm * mnorm) {
    return ConicClass::Degenerate;
  }
  const Scalar disc = 4 * conic.c4() * conic.c5() - conic.c3() * conic.c3();
  const Scalar quad =
      std::abs(conic.c3()) + std::abs(conic.c4()) + std::abs(conic.c5());
  if (std::abs(disc) <= tol * quad * quad) {
    return ConicClass::Parabola;
  }
  return disc > 0 ? ConicClass::Ellipse : ConicClass::Hyperbola;
}

/// Center of a central conic: the point where the gradient vanishes.
template <typename Scalar>
BasicPoint<Scalar> conic_center(const BasicConic<Scalar>& conic)
{
  const Eigen::Matrix<Scalar, 2, 2> h = conic.hessian();
  const Scalar det = h.determinant();
  if (std::abs(det) <= Scalar(1e-14) * h.squaredNorm()) {
    throw Error(ErrorKind::DegenerateConic, "conic has no unique center");
  }
  return h.inverse() * BasicPoint<Scalar>(-conic.c1(), -conic.c2());
}

/// Center, axes, and orientation of an elliptical conic. One semi-axis comes
/// from the quadratic d0 + d2 t^2 along its eigenvector; the other from the
/// square root of the Hessian eigenvalue ratio.
template <typename Scalar>
BasicEllipseParams<Scalar> conic_to_ellipse_params(const BasicConic<Scalar>& conic)
{
  if (classify_conic(conic) != ConicClass::Ellipse) {
    throw Error(ErrorKind::NotAnEllipse, "conic is not an ellipse");
  }
  BasicEllipseParams<Scalar> out;
  out.center = conic_center(conic);
  const Scalar xm = out.center.x();
  const Scalar ym = out.center.y();

  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Scalar, 2, 2>> eig(conic.hessian());
  const auto& lambda = eig.eigenvalues();
  // Larger semi-axis belongs to the eigenvalue of smaller magnitude.
  const int major = std::abs(lambda(0)) <= std::abs(lambda(1)) ? 0 : 1;
  const int minor = 1 - major;
  const BasicPoint<Scalar> u = eig.eigenvectors().col(major);

  const Scalar d0 = 1 + conic.c1() * xm + conic.c4() * xm * xm + conic.c2() * ym +
                    conic.c3() * xm * ym + conic.c5() * ym * ym;
  const Scalar d2 = conic.c4() * u.x() * u.x() + conic.c3() * u.x() * u.y() +
                    conic.c5() * u.y() * u.y();
  const Scalar t2 = -d0 / d2;
  if (!(t2 > 0) || !std::isfinite(t2)) {
    throw Error(ErrorKind::NotAnEllipse, "conic is an imaginary ellipse");
  }
  out.semi_major = std::sqrt(t2);
  out.semi_minor = out.semi_major * std::sqrt(lambda(major) / lambda(minor));

  const Scalar gap = std::abs(lambda(1) - lambda(0));
  if (gap < Scalar(1e-12) * std::max(std::abs(lambda(0)), std::abs(lambda(1)))) {
    out.semi_minor = out.semi_major;
    out.axis_angle = 0;
    return out;
  }
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar angle = std::atan2(u.y(), u.x());
  angle = std::fmod(angle, pi);
  if (angle < 0) angle += pi;
  if (pi - angle < Scalar(1e-12)) angle = 0;
  out.axis_angle = angle;
  return out;
}

/// Inverse of conic_to_ellipse_params. Fails when the ellipse passes through
/// the origin, which the normalized form cannot express.
template <typename Scalar>
BasicConic<Scalar> ellipse_to_conic(const BasicEllipseParams<Scalar>& e)
{
  const Scalar cs = std::cos(e.axis_angle);
  const Scalar sn = std::sin(e.axis_angle);
  const Scalar ia = 1 / (e.semi_major * e.semi_major);
  const Scalar ib = 1 / (e.semi_minor * e.semi_minor);
  // Quadratic form Q = R diag(ia, ib) R^T.
  const Scalar qxx = cs * cs * ia + sn * sn * ib;
  const Scalar qxy = cs * sn * (ia - ib);
  const Scalar qyy = sn * sn * ia + cs * cs * ib;
  const Scalar h = e.center.x();
  const Scalar k = e.center.y();
  const Scalar f = qxx * h * h + 2 * qxy * h * k + qyy * k * k - 1;
  if (std::abs(f) < Scalar(1e-12)) {
    throw Error(ErrorKind::DegenerateConic, "ellipse passes through the origin");
  }
  const Scalar c1 = -2 * (qxx * h + qxy * k);
  const Scalar c2 = -2 * (qxy * h + qyy * k);
  return BasicConic<Scalar>(c1 / f, c2 / f, 2 * qxy / f, qxx / f, qyy / f);
}

/// Homogeneous line through two points.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> line_through(const BasicPoint<Scalar>& p, const BasicPoint<Scalar>& q)
{
  return Eigen::Matrix<Scalar, 3, 1>(p.x(), p.y(), 1).cross(Eigen::Matrix<Scalar, 3, 1>(q.x(), q.y(), 1));
}

/// Scaled discriminant of the conic restricted to the line p + s (q - p).
/// Zero means the line is tangent.
template <typename Scalar>
Scalar tangency_discriminant(const BasicConic<Scalar>& conic, const BasicPoint<Scalar>& p,
                             const BasicPoint<Scalar>& q)
{
  const BasicPoint<Scalar> v = q - p;
  const Scalar alpha = conic.c3() * v.x() * v.y() + conic.c4() * v.x() * v.x() +
                       conic.c5() * v.y() * v.y();
  const BasicPoint<Scalar> g = conic.gradient(p);
  const Scalar beta = g.dot(v);
  const Scalar gamma = conic_eval(conic, p);
  const Scalar disc = beta * beta - 4 * alpha * gamma;
  const Scalar denom = beta * beta + std::abs(4 * alpha * gamma);
  return denom > 0 ? disc / denom : Scalar(0);
}

/// True when the conic has real points (rules out imaginary ellipses).
template <typename Scalar>
bool has_real_points(const BasicConic<Scalar>& conic)
{
  const auto kind = classify_conic(conic);
  if (kind != ConicClass::Ellipse) return true;
  const BasicPoint<Scalar> m = conic_center(conic);
  // For an ellipse the form at the center must have the opposite sign of the
  // quadratic part.
  return conic_eval(conic, m) * conic.c4() < 0;
}

/// Inconic with a prescribed center, solved in the dual plane: the dual conic
/// is incident with the three sidelines and maps the line at infinity to the
/// center. The point conic is the adjugate of the dual.
template <typename Scalar>
BasicConic<Scalar> solve_inconic(const BasicTriangle<Scalar>& t, const BasicPoint<Scalar>& center)
{
  using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
  Eigen::Matrix<Scalar, 5, 6> m;
  for (int i = 0; i < 3; ++i) {
    Vec3 l = line_through(t[(i + 1) % 3], t[(i + 2) % 3]);
    l /= l.template head<2>().norm();
    m.row(i) << l(0) * l(0), 2 * l(0) * l(1), 2 * l(0) * l(2), l(1) * l(1),
        2 * l(1) * l(2), l(2) * l(2);
  }
  // Unknown order: D11 D12 D13 D22 D23 D33.
  m.row(3) << 0, 0, 1, 0, 0, -center.x();
  m.row(4) << 0, 0, 0, 0, 1, -center.y();

  const Eigen::JacobiSVD<Eigen::Matrix<Scalar, 5, 6>> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (!(sv(4) > Scalar(1e-12) * sv(0))) {
    throw Error(ErrorKind::SingularSystem, "dual inconic system has no unique solution");
  }
  const Eigen::Matrix<Scalar, 6, 1> v = svd.matrixV().col(5);
  Eigen::Matrix<Scalar, 3, 3> dual;
  dual << v(0), v(1), v(2),
          v(1), v(3), v(4),
          v(2), v(4), v(5);

  Eigen::Matrix<Scalar, 3, 3> adj;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int r0 = (r + 1) % 3, r1 = (r + 2) % 3;
      const int c0 = (c + 1) % 3, c1 = (c + 2) % 3;
      adj(c, r) = dual(r0, c0) * dual(r1, c1) - dual(r0, c1) * dual(r1, c0);
    }
  }
  const Scalar anorm = adj.cwiseAbs().maxCoeff();
  if (!(std::abs(adj(2, 2)) > Scalar(1e-12) * anorm)) {
    throw Error(ErrorKind::SingularSystem,
                "inconic passes through the origin; not representable in normalized form");
  }
  adj /= adj(2, 2);
  const BasicConic<Scalar> conic(2 * adj(0, 2), 2 * adj(1, 2), 2 * adj(0, 1), adj(0, 0), adj(1, 1));

  if (!has_real_points(conic)) {
    throw Error(ErrorKind::NoRealConic, "inconic has no real points");
  }
  for (int i = 0; i < 3; ++i) {
    const Scalar d = tangency_discriminant(conic, t[(i + 1) % 3], t[(i + 2) % 3]);
    if (!(std::abs(d) <= Scalar(1e-9))) {
      throw Error(ErrorKind::NoRealConic, "inconic fails sideline tangency check");
    }
  }
  return conic;
}

using Point = BasicPoint<double>;
using Conic = BasicConic<double>;
using EllipseParams = BasicEllipseParams<double>;
using Triangle = BasicTriangle<double>;

}  // namespace orbitconics
