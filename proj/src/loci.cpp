#include <orbitconics/loci.hpp>
#include <orbitconics/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace orbitconics {

namespace {

void require_sample_count(std::size_t n)
{
  if (n < kMinSampleCount) {
    throw Error(ErrorKind::InvalidInput, "sample count must be at least 8");
  }
}

template <typename Eval>
LocusSweep sweep(const BilliardShape& shape, std::size_t n, Eval&& eval)
{
  require_sample_count(n);
  const auto grid = sample_grid(n);
  std::vector<std::optional<LocusSample>> slots(n);
  parallel_for(n, [&](std::size_t k) {
    try {
      const OrbitSample s = orbit(shape, grid[k]);
      slots[k] = LocusSample{s.t, eval(s.triangle), s.shape_class};
    } catch (const Error& e) {
      if (e.is_usage_error()) throw;
    }
  });
  LocusSweep out;
  for (auto& slot : slots) {
    if (slot) {
      out.samples.push_back(*slot);
    } else {
      ++out.skipped;
    }
  }
  return out;
}

double angle_from_horizontal(double axis_angle)
{
  return std::min(axis_angle, std::numbers::pi - axis_angle);
}

}  // namespace

std::vector<double> sample_grid(std::size_t n)
{
  std::vector<double> grid(n);
  for (std::size_t k = 0; k < n; ++k) {
    grid[k] = 2 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
  }
  return grid;
}

std::vector<Point> LocusSweep::points() const
{
  std::vector<Point> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.point);
  return out;
}

LocusSweep sweep_locus(const BilliardShape& shape, CenterId id,
                       std::optional<DerivedTriangle> derived, std::size_t n)
{
  return sweep(shape, n, [&](const Triangle& tri) {
    return derived ? center(derived_triangle(tri, *derived), id) : center(tri, id);
  });
}

LocusSweep sweep_excenter_locus(const BilliardShape& shape, std::size_t n)
{
  return sweep(shape, n, [](const Triangle& tri) { return excentral(tri).p1(); });
}

std::string_view to_string(LocusVerdict v)
{
  switch (v) {
    case LocusVerdict::Elliptic: return "Elliptic";
    case LocusVerdict::NonElliptic: return "NonElliptic";
    case LocusVerdict::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

LocusFitReport fit_locus(std::span<const Point> samples)
{
  require_sample_count(samples.size());
  Eigen::Matrix2d normal = Eigen::Matrix2d::Zero();
  Eigen::Vector2d rhs = Eigen::Vector2d::Zero();
  double radius_sum = 0;
  for (const Point& p : samples) {
    const Eigen::Vector2d row(p.x() * p.x(), p.y() * p.y());
    normal += row * row.transpose();
    rhs += row;
    radius_sum += p.norm();
  }

  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(normal, Eigen::EigenvaluesOnly);
  const double lo = std::abs(eig.eigenvalues()(0));
  const double hi = std::abs(eig.eigenvalues()(1));
  if (!(lo > 0) || hi / lo > 1e12) {
    throw Error(ErrorKind::IllConditioned, "locus fit normal equations are ill-conditioned");
  }
  const Eigen::Vector2d ab = normal.ldlt().solve(rhs);

  LocusFitReport out;
  out.samples.assign(samples.begin(), samples.end());
  out.fit_A = ab(0);
  out.fit_B = ab(1);
  double sq = 0;
  for (const Point& p : samples) {
    const double r = out.fit_A * p.x() * p.x() + out.fit_B * p.y() * p.y() - 1;
    sq += r * r;
  }
  const auto count = static_cast<double>(samples.size());
  out.rms_residual = std::sqrt(sq / count);
  out.mean_radius = radius_sum / count;
  if (out.fit_A > 0 && out.fit_B > 0) {
    out.fitted_axes = std::pair{1 / std::sqrt(out.fit_A), 1 / std::sqrt(out.fit_B)};
  }

  if (out.fitted_axes && out.rms_residual <= kEllipticRms) {
    out.verdict = LocusVerdict::Elliptic;
  } else if (out.rms_residual >= kNonEllipticRms || !out.fitted_axes) {
    out.verdict = LocusVerdict::NonElliptic;
  } else {
    out.verdict = LocusVerdict::Inconclusive;
  }
  return out;
}

PiecewiseLocusReport classify_locus(const LocusSweep& sweep)
{
  PiecewiseLocusReport out;
  const auto all = sweep.points();
  out.overall = fit_locus(all);

  const bool mixed =
      std::any_of(sweep.samples.begin(), sweep.samples.end(),
                  [](const LocusSample& s) { return s.shape_class == ShapeClass::Obtuse; }) &&
      std::any_of(sweep.samples.begin(), sweep.samples.end(),
                  [](const LocusSample& s) { return s.shape_class == ShapeClass::Acute; });
  if (!mixed) return out;

  for (ShapeClass cls : {ShapeClass::Acute, ShapeClass::Obtuse}) {
    std::vector<Point> piece;
    for (const auto& s : sweep.samples) {
      if (s.shape_class == cls) piece.push_back(s.point);
    }
    if (piece.size() >= kMinSampleCount) {
      out.pieces.emplace_back(cls, fit_locus(piece));
    }
  }
  return out;
}

CircleFit fit_circle(std::span<const Point> samples)
{
  if (samples.size() < 3) throw Error(ErrorKind::InvalidInput, "circle fit needs 3 samples");
  // x^2 + y^2 = 2 cx x + 2 cy y + (r^2 - |c|^2)
  Eigen::MatrixXd m(samples.size(), 3);
  Eigen::VectorXd rhs(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    m.row(row) << 2 * samples[i].x(), 2 * samples[i].y(), 1;
    rhs(row) = samples[i].squaredNorm();
  }
  const Eigen::Vector3d sol = m.colPivHouseholderQr().solve(rhs);
  CircleFit out;
  out.center = sol.head<2>();
  out.radius = std::sqrt(sol(2) + out.center.squaredNorm());
  double sq = 0;
  for (const Point& p : samples) {
    const double r = (p - out.center).norm() - out.radius;
    sq += r * r;
  }
  out.rms_residual = std::sqrt(sq / static_cast<double>(samples.size()));
  return out;
}

RangeStat RangeStat::of(std::span<const double> values)
{
  RangeStat s;
  if (values.empty()) return s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  return s;
}

bool InvariantReport::all_passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

InvariantReport invariant_report(const BilliardShape& shape, std::size_t n)
{
  require_sample_count(n);
  const auto grid = sample_grid(n);

  struct Row {
    double perimeter, rho, x9, act_major, act_minor, act_tilt, med_major, med_minor, med_tilt,
        cb_error;
  };
  std::vector<Row> rows(n);
  parallel_for(n, [&](std::size_t k) {
    const Triangle tri = orbit(shape, grid[k]).triangle;
    const auto act_cb = circumbilliard(act(tri)).params;
    const auto med_cb = circumbilliard(medial(tri)).params;
    const auto cb = circumbilliard(tri).params;
    const double cb_error =
        std::max({std::abs(cb.semi_major - shape.a()) / shape.a(),
                  std::abs(cb.semi_minor - shape.b()) / shape.a(),
                  cb.center.norm() / shape.a(), angle_from_horizontal(cb.axis_angle)});
    rows[k] = {tri.perimeter(),
               inradius(tri) / circumradius(tri),
               center(tri, CenterId::X9).norm(),
               act_cb.semi_major,
               act_cb.semi_minor,
               angle_from_horizontal(act_cb.axis_angle),
               med_cb.semi_major,
               med_cb.semi_minor,
               angle_from_horizontal(med_cb.axis_angle),
               cb_error};
  });

  auto column = [&](auto member) {
    std::vector<double> v;
    v.reserve(n);
    for (const auto& r : rows) v.push_back(r.*member);
    return RangeStat::of(v);
  };

  InvariantReport rep;
  rep.a = shape.a();
  rep.b = shape.b();
  rep.n = n;
  rep.perimeter = column(&Row::perimeter);
  rep.rho = column(&Row::rho);
  rep.x9_norm = column(&Row::x9);
  rep.act_cb_major = column(&Row::act_major);
  rep.act_cb_minor = column(&Row::act_minor);
  rep.medial_cb_major = column(&Row::med_major);
  rep.medial_cb_minor = column(&Row::med_minor);
  rep.rho_closed_form = rho(shape);
  const RangeStat act_tilt = column(&Row::act_tilt);
  const RangeStat med_tilt = column(&Row::med_tilt);
  const RangeStat cb_error = column(&Row::cb_error);

  auto check = [&](std::string name, double value, double tol) {
    rep.checks.push_back({std::move(name), value, tol, value <= tol});
  };
  constexpr double tol = 1e-9;
  check("perimeter_relative_spread", rep.perimeter.relative_spread(), tol);
  check("rho_relative_spread", rep.rho.relative_spread(), tol);
  check("rho_closed_form_error", std::abs(rep.rho.mean - rep.rho_closed_form), tol);
  check("x9_max_norm_over_a", rep.x9_norm.max / shape.a(), tol);
  check("circumbilliard_fixed_point_error", cb_error.max, tol);
  check("act_cb_major_relative_spread", rep.act_cb_major.relative_spread(), tol);
  check("act_cb_minor_relative_spread", rep.act_cb_minor.relative_spread(), tol);
  check("act_cb_axis_tilt", act_tilt.max, tol);
  check("medial_cb_major_relative_spread", rep.medial_cb_major.relative_spread(), tol);
  check("medial_cb_minor_relative_spread", rep.medial_cb_minor.relative_spread(), tol);
  check("medial_cb_axis_tilt", med_tilt.max, tol);
  return rep;
}

}  // namespace orbitconics
