#include <orbitconics/centers.hpp>
#include <orbitconics/kernel.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace orbitconics;

namespace {

Triangle random_triangle(std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> u(-5, 5);
  for (;;) {
    try {
      Triangle t(Point(u(rng), u(rng)), Point(u(rng), u(rng)), Point(u(rng), u(rng)));
      if (t.area() > 0.05 * t.longest_side() * t.longest_side()) return t;
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("triangle rejects degenerate and non-finite input")
{
  CHECK_THROWS_AS(Triangle(Point(0, 0), Point(1, 1), Point(2, 2)), Error);
  try {
    Triangle(Point(0, 0), Point(1, 0), Point(2, 1e-14));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateTriangle);
  }
  try {
    Triangle(Point(0, NAN), Point(1, 0), Point(0, 1));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("triangle sides are opposite their vertices")
{
  const Triangle t(Point(0, 0), Point(4, 0), Point(0, 3));
  CHECK(t.s1() == doctest::Approx(5));
  CHECK(t.s2() == doctest::Approx(3));
  CHECK(t.s3() == doctest::Approx(4));
  CHECK(t.perimeter() == doctest::Approx(12));
  CHECK(t.area() == doctest::Approx(6));
}

TEST_CASE("circumconic passes through the vertices and is centered where asked")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Triangle t = random_triangle(rng);
    const Point m = center(t, CenterId::X9);
    Conic c;
    try {
      c = solve_circumconic(t, m);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SingularSystem);
      continue;
    }
    for (int i = 0; i < 3; ++i) CHECK(std::abs(conic_eval(c, t[i])) <= 1e-10 * c.scale());
    CHECK((conic_center(c) - m).norm() <= 1e-8 * t.longest_side());
  }
}

TEST_CASE("circumconic centered on a side midpoint is singular")
{
  const Triangle t(Point(1, 0.5), Point(3, 0.2), Point(2, 2));
  try {
    solve_circumconic(t, Point((t.p1() + t.p2()) / 2));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularSystem);
  }
}

TEST_CASE("circumcircle is recovered from the circumcenter")
{
  const Triangle t(Point(1, 2), Point(4, 1.5), Point(2.5, 5));
  const Conic c = solve_circumconic(t, center(t, CenterId::X3));
  const EllipseParams e = conic_to_ellipse_params(c);
  CHECK(e.semi_major == doctest::Approx(circumradius(t)).epsilon(1e-12));
  CHECK(e.semi_minor == doctest::Approx(circumradius(t)).epsilon(1e-12));
  CHECK(e.axis_angle == 0);
}

TEST_CASE("classify_conic")
{
  CHECK(classify_conic(Conic(0, 0, 0, -1, -0.25)) == ConicClass::Ellipse);
  CHECK(classify_conic(Conic(0, 0, 0, -1, 0.25)) == ConicClass::Hyperbola);
  CHECK(classify_conic(Conic(0, 1, 0, -1, 0)) == ConicClass::Parabola);
  // 1 - 2x + x^2 = (1 - x)^2, a double line.
  CHECK(classify_conic(Conic(-2, 0, 0, 1, 0)) == ConicClass::Degenerate);
}

TEST_CASE("imaginary ellipse has no real points")
{
  const Conic c(0, 0, 0, 1, 1);
  CHECK(classify_conic(c) == ConicClass::Ellipse);
  CHECK_FALSE(has_real_points(c));
  CHECK_THROWS_AS(conic_to_ellipse_params(c), Error);
}

TEST_CASE("ellipse parameters round-trip through the conic form")
{
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> aspect(1, 20), major(0.2, 3), angle(0, std::numbers::pi),
      off(2, 6), dir(0, 2 * std::numbers::pi);
  for (int i = 0; i < 1000; ++i) {
    EllipseParams e;
    e.semi_major = major(rng);
    e.semi_minor = e.semi_major / aspect(rng);
    e.axis_angle = angle(rng);
    // Keep the origin outside the ellipse.
    const double th = dir(rng);
    e.center = (e.semi_major * off(rng)) * Point(std::cos(th), std::sin(th));

    const EllipseParams back = conic_to_ellipse_params(ellipse_to_conic(e));
    CHECK((back.center - e.center).norm() <= 1e-9 * (1 + e.center.norm()));
    CHECK(std::abs(back.semi_major - e.semi_major) <= 1e-9 * e.semi_major);
    CHECK(std::abs(back.semi_minor - e.semi_minor) <= 1e-9 * e.semi_major);
    const double dtheta = std::remainder(back.axis_angle - e.axis_angle, std::numbers::pi);
    CHECK(std::abs(dtheta) <= 1e-9);
  }
}

TEST_CASE("ellipse through the origin is not representable")
{
  EllipseParams e;
  e.center = Point(2, 0);
  e.semi_major = 2;
  e.semi_minor = 1;
  CHECK_THROWS_AS(ellipse_to_conic(e), Error);
}

TEST_CASE("Mittenpunkt circumconic is always an ellipse")
{
  std::mt19937_64 rng(3);
  int solved = 0;
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = random_triangle(rng);
    try {
      const Conic c = solve_circumconic(t, center(t, CenterId::X9));
      CHECK(classify_conic(c) == ConicClass::Ellipse);
      ++solved;
    } catch (const Error& e) {
      // Vertices on the origin make the normalized form unusable.
      CHECK(e.kind() == ErrorKind::SingularSystem);
    }
  }
  CHECK(solved > 990);
}

TEST_CASE("Steiner inellipse touches the side midpoints")
{
  const Triangle t(Point(1, 1), Point(5, 2), Point(2, 4));
  const Conic c = solve_inconic(t, center(t, CenterId::X2));
  for (int i = 0; i < 3; ++i) {
    const Point mid = (t[(i + 1) % 3] + t[(i + 2) % 3]) / 2;
    CHECK(std::abs(conic_eval(c, mid)) <= 1e-10 * c.scale());
    CHECK(std::abs(tangency_discriminant(c, t[(i + 1) % 3], t[(i + 2) % 3])) <= 1e-9);
  }
  CHECK((conic_center(c) - center(t, CenterId::X2)).norm() <= 1e-12);
}

TEST_CASE("incenter inconic is the incircle")
{
  const Triangle t(Point(1, 1), Point(6, 1.5), Point(2, 4));
  const EllipseParams e = conic_to_ellipse_params(solve_inconic(t, center(t, CenterId::X1)));
  CHECK(e.semi_major == doctest::Approx(inradius(t)).epsilon(1e-10));
  CHECK(e.semi_minor == doctest::Approx(inradius(t)).epsilon(1e-10));
}

TEST_CASE("kernel instantiates in long double")
{
  using LPoint = BasicPoint<long double>;
  const BasicTriangle<long double> t(LPoint(1, 0.5L), LPoint(-0.8L, 0.9L), LPoint(-0.3L, -1.1L));
  const LPoint m(0.05L, 0.02L);
  const auto c = solve_circumconic(t, m);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(conic_eval(c, t[i])) <= 1e-15L);
  const auto e = conic_to_ellipse_params(c);
  CHECK((e.center - m).norm() <= 1e-14L);
  const auto back = conic_to_ellipse_params(ellipse_to_conic(e));
  CHECK(std::abs(back.semi_major - e.semi_major) <= 1e-14L);
  const auto inc = solve_inconic(t, LPoint((t.p1() + t.p2() + t.p3()) / 3));
  CHECK(classify_conic(inc) == ConicClass::Ellipse);
}
