// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "oracles.hpp"

#include <orbitconics/circumbilliard.hpp>
#include <orbitconics/conic_invariants.hpp>
#include <orbitconics/loci.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace orbitconics;

namespace {

class Criterion {
 public:
  void require(bool ok, const char* fmt, double value)
  {
    if (ok) return;
    passed_ = false;
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, value);
    if (!detail_.empty()) detail_ += "; ";
    detail_ += buf;
  }

  void note(const char* fmt, double value)
  {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, value);
    if (!summary_.empty()) summary_ += ", ";
    summary_ += buf;
  }

  bool passed() const { return passed_; }
  const std::string& detail() const { return passed_ ? summary_ : detail_; }

 private:
  bool passed_ = true;
  std::string detail_;
  std::string summary_;
};

double tilt(double angle) { return std::min(angle, std::numbers::pi - angle); }

void circumbilliard_fixed_point(Criterion& c)
{
  double worst = 0;
  for (double a : {1.2, 1.5, 1.618, 2.5}) {
    const BilliardShape s(a, 1);
    for (double t : sample_grid(360)) {
      const EllipseParams p = circumbilliard(orbit(s, t).triangle).params;
      worst = std::max({worst, std::abs(p.semi_major - a) / a, std::abs(p.semi_minor - 1) / 1,
                        p.center.norm() / a, tilt(p.axis_angle)});
    }
  }
  c.require(worst <= 1e-9, "max relative error %.3g", worst);
  c.note("max err %.2g", worst);
}

void conservation(Criterion& c)
{
  for (double a : {1.2, 1.5, 1.618, 2.5}) {
    const InvariantReport rep = invariant_report(BilliardShape(a, 1), kDefaultSampleCount);
    c.require(rep.perimeter.relative_spread() <= 1e-9, "perimeter spread %.3g",
              rep.perimeter.relative_spread());
    c.require(rep.rho.relative_spread() <= 1e-9, "rho spread %.3g", rep.rho.relative_spread());
    c.require(std::abs(rep.rho.mean - rep.rho_closed_form) <= 1e-9, "rho closed-form gap %.3g",
              std::abs(rep.rho.mean - rep.rho_closed_form));
    c.require(rep.x9_norm.max <= 1e-9 * a, "|X9| %.3g", rep.x9_norm.max);
  }
  // Independent r/R from the geometric incircle and circumcircle.
  const BilliardShape s(1.5, 1);
  double gap = 0;
  for (double t : sample_grid(360)) {
    gap = std::max(gap, std::abs(oracle::r_over_R(orbit(s, t).triangle) - rho(s)));
  }
  c.require(gap <= 1e-9, "geometric r/R gap %.3g", gap);
  c.note("rho(1.5,1) = %.12g", rho(s));
}

void right_angle_geometry(Criterion& c)
{
  const BilliardShape s(1.5, 1);
  const auto perp = right_angle_vertex(s);
  c.require(perp.has_value(), "no right-angle vertex at a/b = %.3g", 1.5);
  if (!perp) return;
  c.require(std::abs(s.boundary_residual(*perp)) <= 1e-10, "on-boundary residual %.3g",
            s.boundary_residual(*perp));
  c.require(std::abs(right_angle_quartic(s, perp->x())) <= 1e-10, "quartic residual %.3g",
            right_angle_quartic(s, perp->x()));
  const auto [p2, p3] = right_vertex_companions(s, *perp);
  const double dot = (p2 - *perp).dot(p3 - *perp);
  c.require(std::abs(dot) <= 1e-9, "right-angle dot product %.3g", dot);

  // Classification flips exactly where a vertex crosses |x| = x_perp.
  const auto grid = sample_grid(720);
  std::vector<OrbitSample> orbits;
  for (double t : grid) orbits.push_back(orbit(s, t));
  int flips = 0, misplaced = 0, inconsistent = 0;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const Triangle& tri = orbits[k].triangle;
    bool on_arc = false;
    for (int i = 0; i < 3; ++i) on_arc = on_arc || on_obtuse_arc(s, tri[i]);
    if (on_arc != (orbits[k].shape_class == ShapeClass::Obtuse)) ++inconsistent;

    const OrbitSample& next = orbits[(k + 1) % orbits.size()];
    if (next.shape_class == orbits[k].shape_class) continue;
    ++flips;
    bool crossed = false;
    for (int i = 0; i < 3; ++i) {
      const double before = std::abs(tri[i].x()) - perp->x();
      const double after = std::abs(next.triangle[i].x()) - perp->x();
      crossed = crossed || (before > 0) != (after > 0);
    }
    if (!crossed) ++misplaced;
  }
  c.require(inconsistent == 0, "%g samples disagree with the obtuse arcs", inconsistent);
  c.require(misplaced == 0, "%g flips away from x_perp", misplaced);
  c.require(flips >= 4, "only %g classification flips", flips);

  c.require(std::abs(threshold_alpha4() - 1.352) <= 1e-3, "alpha4 = %.6g", threshold_alpha4());
  c.require(std::abs(threshold_alpha_eq() - 1.982) <= 1e-3, "alpha_eq = %.6g", threshold_alpha_eq());
  c.note("x_perp = %.10g", perp->x());
  c.note("flips = %g", flips);
}

void locus_census(Criterion& c)
{
  for (double a : {1.5, 1.618}) {
    const BilliardShape s(a, 1);
    const double k = gergonne_locus_scale(s);
    auto fit = [&](CenterId id) {
      return classify_locus(sweep_locus(s, id, std::nullopt, kDefaultSampleCount)).overall;
    };
    const LocusFitReport x7 = fit(CenterId::X7);
    const LocusFitReport x142 = fit(CenterId::X142);
    c.require(x7.verdict == LocusVerdict::Elliptic, "X7 rms %.3g", x7.rms_residual);
    c.require(x142.verdict == LocusVerdict::Elliptic, "X142 rms %.3g", x142.rms_residual);
    if (x7.fitted_axes && x142.fitted_axes) {
      const double e7 = std::max(std::abs(x7.fitted_axes->first - k * a),
                                 std::abs(x7.fitted_axes->second - k));
      const double e142 = std::max(std::abs(x142.fitted_axes->first - k * a / 2),
                                   std::abs(x142.fitted_axes->second - k / 2));
      c.require(e7 <= 1e-9, "X7 axes off by %.3g", e7);
      c.require(e142 <= 1e-9, "X142 axes off by %.3g", e142);
    }
    const LocusFitReport x168 = fit(CenterId::X168);
    const LocusFitReport x6 = fit(CenterId::X6);
    c.require(x168.verdict == LocusVerdict::NonElliptic, "X168 rms only %.3g", x168.rms_residual);
    c.require(x6.verdict == LocusVerdict::NonElliptic, "X6 rms only %.3g", x6.rms_residual);
    c.require(x168.rms_residual >= kNonEllipticRms, "X168 rms %.3g", x168.rms_residual);
    c.require(x6.rms_residual >= kNonEllipticRms, "X6 rms %.3g", x6.rms_residual);

    const LocusFitReport exc = fit_locus(sweep_excenter_locus(s, kDefaultSampleCount).points());
    const auto [ae, be] = excenter_locus_axes(s);
    c.require(exc.fitted_axes.has_value(), "excenter locus not elliptic at a = %.4g", a);
    if (exc.fitted_axes) {
      const double e = std::max(std::abs(exc.fitted_axes->first - ae),
                                std::abs(exc.fitted_axes->second - be));
      c.require(e <= 1e-9, "excenter axes off by %.3g", e);
    }
    if (a == 1.5) {
      c.note("X168 rms %.2g", x168.rms_residual);
      c.note("X6 rms %.2g", x6.rms_residual);
    }
  }
}

void collinear_chain(Criterion& c)
{
  double off_line = 0, ratio_err = 0, intouch = 0;
  for (double a : {1.2, 1.5, 2.5}) {
    const BilliardShape s(a, 1);
    for (double t : sample_grid(360)) {
      const Triangle tri = orbit(s, t).triangle;
      const Point x7 = center(tri, CenterId::X7), x142 = center(tri, CenterId::X142);
      const Point x2 = center(tri, CenterId::X2), x9 = center(tri, CenterId::X9);
      const Point x144 = center(tri, CenterId::X144);
      for (const Point& p : {x142, x2, x9}) {
        off_line = std::max(off_line, oracle::distance_to_line(p, x7, x144) / a);
      }
      const double unit = (x142 - x2).norm();
      ratio_err = std::max({ratio_err, std::abs((x7 - x142).norm() / unit - 3) / 3,
                            std::abs((x2 - x9).norm() / unit - 2) / 2,
                            std::abs((x9 - x144).norm() / unit - 6) / 6});
      const IntouchSuperposition r = intouch_superposition_check(s, t);
      intouch = std::max({intouch, r.act_on_billiard, r.periodic_on_medial_cb});
    }
  }
  c.require(off_line <= 1e-9, "max distance to line %.3g", off_line);
  c.require(ratio_err <= 1e-9, "ratio error %.3g", ratio_err);
  c.require(intouch <= 1e-9, "intouch residual %.3g", intouch);
  c.note("ratio err %.2g", ratio_err);
  c.note("intouch %.2g", intouch);
}

void poristic(Criterion& c)
{
  const PoristicShape ps(0.3625, 1);
  std::vector<double> aspects;
  std::vector<Point> x9;
  for (double th : sample_grid(360)) {
    const CircumbilliardResult cb = circumbilliard(poristic_triangle(ps, th));
    aspects.push_back(cb.aspect);
    x9.push_back(cb.mittenpunkt);
  }
  const RangeStat s = RangeStat::of(aspects);
  const double closed = poristic_cb_aspect(ps);
  c.require(s.relative_spread() <= 1e-9, "aspect spread %.3g", s.relative_spread());
  c.require(std::abs(s.mean - closed) <= 1e-6, "closed-form gap %.3g", std::abs(s.mean - closed));
  c.require(std::abs(s.mean - 1.5) <= 2e-3, "aspect mean %.6g", s.mean);
  const CircleFit circle = fit_circle(x9);
  c.require(circle.rms_residual <= 1e-7 * ps.R(), "X9 circle rms %.3g", circle.rms_residual);
  c.note("aspect %.10g", s.mean);
  c.note("X9 circle rms %.2g", circle.rms_residual);
}

void focal_ratio(Criterion& c)
{
  for (double a : {1.3, 1.5}) {
    const BilliardShape s(a, 1);
    const auto profile = focal_profile(s, 2000);
    std::vector<double> ratios;
    for (const auto& p : profile) ratios.push_back(p.lambda_prime / p.lambda);
    const RangeStat r = RangeStat::of(ratios);
    const double closed = focal_ratio_closed_form(rho(s));
    c.require(r.relative_spread() <= 1e-9, "ratio spread %.3g", r.relative_spread());
    c.require(std::abs(r.mean - closed) <= 1e-9, "closed-form gap %.3g", std::abs(r.mean - closed));
    c.require(count_local_maxima(profile) == 3, "lambda has %g interior maxima",
              static_cast<double>(count_local_maxima(profile)));
    c.note(a == 1.3 ? "ratio(1.3) %.10g" : "ratio(1.5) %.10g", r.mean);

    for (double t : {0.25, 0.6, 1.0, 1.35}) {
      const Triangle tri = orbit(s, t).triangle;
      const RectHyperbola f = feuerbach_hyperbola(tri);
      const RectHyperbola j = jerabek_excentral(tri);
      double resid = 0;
      for (int i = 0; i < 3; ++i) resid = std::max(resid, std::abs(f.normalized_eval(tri[i])));
      for (CenterId id : {CenterId::X1, CenterId::X4, CenterId::X9}) {
        resid = std::max(resid, std::abs(f.normalized_eval(center(tri, id))));
      }
      for (CenterId id : {CenterId::X1, CenterId::X9, CenterId::X40}) {
        resid = std::max(resid, std::abs(j.normalized_eval(center(tri, id))));
      }
      const Triangle exc = excentral(tri);
      for (int i = 0; i < 3; ++i) resid = std::max(resid, std::abs(j.normalized_eval(exc[i])));
      const double centers = std::max((f.center() - center(tri, CenterId::X11)).norm(),
                                      (j.center() - center(tri, CenterId::X100)).norm());
      c.require(resid <= 1e-9, "hyperbola incidence residual %.3g", resid);
      c.require(centers <= 1e-9, "hyperbola center error %.3g", centers);
      const auto hits = billiard_intersections(s, j);
      c.require(hits.size() == 2, "J_exc meets the billiard %g times",
                static_cast<double>(hits.size()));
    }
  }
}

void inconic_ratios(Criterion& c)
{
  double worst = 0;
  for (double a : {1.2, 1.5, 2.5}) {
    const BilliardShape s(a, 1);
    const EllipseParams cst = caustic(s);
    for (double t : {0.4, 0.9, 1.3, 2.2, 3.7}) {
      const Triangle tri = orbit(s, t).triangle;
      const Triangle exc = excentral(tri);

      const InconicAxes x3 = excentral_inconic_axes(tri, ExcentralInconic::X3Centered);
      const EllipseParams i3 = conic_to_ellipse_params(
          solve_inconic(exc, excentral_inconic_center(tri, ExcentralInconic::X3Centered)));
      const InconicAxes mb = excentral_inconic_axes(tri, ExcentralInconic::MacBeath);
      const EllipseParams im = conic_to_ellipse_params(
          solve_inconic(exc, excentral_inconic_center(tri, ExcentralInconic::MacBeath)));
      const EllipseParams e1 =
          conic_to_ellipse_params(solve_circumconic(tri, center(tri, CenterId::X1)));
      const EllipseParams caus = conic_to_ellipse_params(solve_inconic(tri, Point(0, 0)));
      const EllipseParams eb = conic_to_ellipse_params(solve_inconic(exc, Point(0, 0)));
      const double quarter =
          std::abs(std::remainder(i3.axis_angle - e1.axis_angle - std::numbers::pi / 2, std::numbers::pi));

      worst = std::max({worst, std::abs(i3.semi_major - x3.major), std::abs(i3.semi_minor - x3.minor),
                        std::abs(im.semi_major - mb.major), std::abs(im.semi_minor - mb.minor),
                        std::abs(i3.semi_major - e1.semi_major),
                        std::abs(i3.semi_minor - e1.semi_minor), quarter,
                        std::abs(caus.semi_major - cst.semi_major),
                        std::abs(caus.semi_minor - cst.semi_minor), std::abs(eb.semi_major - a),
                        std::abs(eb.semi_minor - 1)});
    }
  }
  c.require(worst <= 1e-9, "max axis error %.3g", worst);
  c.note("max err %.2g", worst);
}

void oracle_cross_check(Criterion& c)
{
  std::mt19937_64 rng(20200605);
  std::uniform_real_distribution<double> aspect(1.05, 3), param(0, 2 * std::numbers::pi);
  double worst = 0;
  int missing = 0;
  for (int i = 0; i < 32; ++i) {
    const BilliardShape s(aspect(rng), 1);
    const double t = param(rng);
    const auto ref = oracle::reflection_closure(s, t);
    if (!ref) {
      ++missing;
      continue;
    }
    worst = std::max(worst, oracle::vertex_set_distance(oracle::vertices(orbit(s, t).triangle), *ref));
  }
  c.require(missing == 0, "oracle failed to close at %g pairs", missing);
  c.require(worst <= 1e-8, "max vertex distance %.3g", worst);
  c.note("max vertex distance %.2g", worst);
}

}  // namespace

int main()
{
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria{
      {"AC1 circumbilliard fixed point", circumbilliard_fixed_point},
      {"AC2 conservation suite", conservation},
      {"AC3 right-angle geometry", right_angle_geometry},
      {"AC4 locus census", locus_census},
      {"AC5 collinear chain and intouch superposition", collinear_chain},
      {"AC6 poristic circumbilliard aspect", poristic},
      {"AC7 focal-length ratio", focal_ratio},
      {"AC8 inconic ratios", inconic_ratios},
      {"AC9 reflection-map oracle cross-check", oracle_cross_check},
  };

  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Criterion c;
    try {
      check(c);
    } catch (const std::exception& e) {
      std::printf("FAIL  %s  (exception: %s)\n", name, e.what());
      ++failed;
      continue;
    }
    std::printf("%s  %s  (%s)\n", c.passed() ? "PASS" : "FAIL", name, c.detail().c_str());
    if (!c.passed()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
