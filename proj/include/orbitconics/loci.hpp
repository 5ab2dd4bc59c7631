#pragma once

#include <orbitconics/billiard.hpp>
#include <orbitconics/centers.hpp>
#include <orbitconics/circumbilliard.hpp>

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitconics {

inline constexpr std::size_t kDefaultSampleCount = 720;
inline constexpr std::size_t kMinSampleCount = 8;

/// Sweep parameters t_k = 2 pi (k + 1/2) / n. The half-step offset keeps the
/// grid off the isosceles configurations t = 0, pi/2, pi, 3pi/2.
std::vector<double> sample_grid(std::size_t n);

struct LocusSample {
  double t;
  Point point;
  ShapeClass shape_class;  // of the reference 3-periodic
};

struct LocusSweep {
  std::vector<LocusSample> samples;
  std::size_t skipped = 0;  // samples where the center was undefined

  std::vector<Point> points() const;
};

/// Positions of `id` over the family. With `derived` set, the center is taken
/// of the derived triangle (e.g. X9 of the excentral traces X168).
LocusSweep sweep_locus(const BilliardShape& shape, CenterId id,
                       std::optional<DerivedTriangle> derived, std::size_t n);

/// Positions of the first excenter over the family.
LocusSweep sweep_excenter_locus(const BilliardShape& shape, std::size_t n);

enum class LocusVerdict { Elliptic, NonElliptic, Inconclusive };
std::string_view to_string(LocusVerdict v);

/// Verdict thresholds on the rms of A x^2 + B y^2 - 1 (dimensionless).
inline constexpr double kEllipticRms = 1e-8;
inline constexpr double kNonEllipticRms = 1e-4;

struct LocusFitReport {
  std::vector<Point> samples;
  double fit_A = 0;
  double fit_B = 0;
  double rms_residual = 0;
  double mean_radius = 0;
  LocusVerdict verdict = LocusVerdict::Inconclusive;
  /// (1/sqrt(A), 1/sqrt(B)) when both coefficients are positive.
  std::optional<std::pair<double, double>> fitted_axes;
};

/// Least-squares zero-centered, axis-aligned ellipse A x^2 + B y^2 = 1.
LocusFitReport fit_locus(std::span<const Point> samples);

struct PiecewiseLocusReport {
  LocusFitReport overall;
  /// One fit per orbit shape class that has at least kMinSampleCount samples.
  /// Only populated when the sweep mixes acute and obtuse 3-periodics.
  std::vector<std::pair<ShapeClass, LocusFitReport>> pieces;
};

PiecewiseLocusReport classify_locus(const LocusSweep& sweep);

struct CircleFit {
  Point center = Point::Zero();
  double radius = 0;
  double rms_residual = 0;  // rms of |p - center| - radius
};

/// Algebraic least-squares circle through the samples.
CircleFit fit_circle(std::span<const Point> samples);

struct RangeStat {
  double min = 0;
  double max = 0;
  double mean = 0;

  double spread() const { return max - min; }
  double relative_spread() const { return mean != 0 ? spread() / std::abs(mean) : spread(); }

  static RangeStat of(std::span<const double> values);
};

struct InvariantCheck {
  std::string name;
  double value;
  double tolerance;
  bool passed;
};

struct InvariantReport {
  double a = 0;
  double b = 0;
  std::size_t n = 0;
  RangeStat perimeter;
  RangeStat rho;
  RangeStat x9_norm;
  RangeStat act_cb_major;
  RangeStat act_cb_minor;
  RangeStat medial_cb_major;
  RangeStat medial_cb_minor;
  double rho_closed_form = 0;
  std::vector<InvariantCheck> checks;

  bool all_passed() const;
};

InvariantReport invariant_report(const BilliardShape& shape, std::size_t n);

}  // namespace orbitconics
