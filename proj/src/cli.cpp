#include <orbitconics/billiard.hpp>
#include <orbitconics/circumbilliard.hpp>
#include <orbitconics/cli.hpp>
#include <orbitconics/conic_invariants.hpp>
#include <orbitconics/loci.hpp>
#include <orbitconics/parallel.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

namespace orbitconics::cli {

using nlohmann::ordered_json;

std::string format_number(double value)
{
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_file_atomically(const std::string& path, const std::string& contents)
{
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot open output file: " + path);
    f << contents;
    f.flush();
    if (!f) throw Error(ErrorKind::InvalidInput, "cannot write output file: " + path);
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorKind::InvalidInput, "cannot move output into place: " + path);
  }
}

namespace {

// JSON never carries NaN: non-finite values become strings.
ordered_json num(double v)
{
  if (std::isfinite(v)) return v;
  return format_number(v);
}

ordered_json point_json(const Point& p) { return ordered_json::array({num(p.x()), num(p.y())}); }

ordered_json range_json(const RangeStat& s)
{
  return {{"min", num(s.min)},
          {"max", num(s.max)},
          {"mean", num(s.mean)},
          {"relative_spread", num(s.relative_spread())}};
}

ordered_json report_header(const std::string& command)
{
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

class Csv {
 public:
  explicit Csv(const std::vector<std::string>& header)
  {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) os_ << ',';
      os_ << header[i];
    }
    os_ << '\n';
  }

  Csv& operator<<(double v)
  {
    sep();
    os_ << format_number(v);
    return *this;
  }
  Csv& operator<<(std::string_view s)
  {
    sep();
    os_ << s;
    return *this;
  }
  void end_row()
  {
    os_ << '\n';
    fresh_ = true;
  }
  std::string str() const { return os_.str(); }

 private:
  void sep()
  {
    if (!fresh_) os_ << ',';
    fresh_ = false;
  }
  std::ostringstream os_;
  bool fresh_ = true;
};

void emit(const std::string& path, const std::string& contents, std::ostream& out)
{
  if (path.empty()) {
    out << contents;
  } else {
    write_file_atomically(path, contents);
  }
}

void require_samples(std::size_t n)
{
  if (n < kMinSampleCount) throw Error(ErrorKind::InvalidInput, "--n must be at least 8");
}

// ---------------------------------------------------------------- family

struct FamilyArgs {
  double a = 0, b = 0;
  std::size_t n = kDefaultSampleCount;
  std::string format = "csv";
  std::string out;
};

void run_family(const FamilyArgs& args, std::ostream& out)
{
  require_samples(args.n);
  const BilliardShape shape(args.a, args.b);
  const auto grid = sample_grid(args.n);
  std::vector<std::optional<OrbitSample>> samples(args.n);
  parallel_for(args.n, [&](std::size_t k) { samples[k] = orbit(shape, grid[k]); });

  if (args.format == "json") {
    ordered_json j = report_header("family");
    j["a"] = num(args.a);
    j["b"] = num(args.b);
    j["n"] = args.n;
    j["rho_closed_form"] = num(rho(shape));
    ordered_json rows = ordered_json::array();
    for (const auto& s : samples) {
      const Triangle& tri = s->triangle;
      rows.push_back({{"t", num(s->t)},
                      {"vertices", {point_json(tri.p1()), point_json(tri.p2()), point_json(tri.p3())}},
                      {"class", to_string(s->shape_class)},
                      {"perimeter", num(tri.perimeter())},
                      {"rho", num(inradius(tri) / circumradius(tri))}});
    }
    j["samples"] = std::move(rows);
    emit(args.out, dump(j), out);
    return;
  }

  Csv csv({"t", "x1", "y1", "x2", "y2", "x3", "y3", "class", "perimeter", "rho"});
  for (const auto& s : samples) {
    const Triangle& tri = s->triangle;
    csv << s->t;
    for (int i = 0; i < 3; ++i) csv << tri[i].x() << tri[i].y();
    csv << to_string(s->shape_class) << tri.perimeter() << inradius(tri) / circumradius(tri);
    csv.end_row();
  }
  emit(args.out, csv.str(), out);
}

// ---------------------------------------------------------------- cb

struct CbArgs {
  std::string vertices;
  std::string out;
};

std::vector<double> parse_number_list(const std::string& text)
{
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string token = text.substr(pos, comma - pos);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::InvalidInput, "not a number: '" + token + "'");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return values;
}

void run_cb(const CbArgs& args, std::ostream& out)
{
  const auto v = parse_number_list(args.vertices);
  if (v.size() != 6) throw Error(ErrorKind::InvalidInput, "--vertices needs six numbers");
  const Triangle tri(Point(v[0], v[1]), Point(v[2], v[3]), Point(v[4], v[5]));
  const CircumbilliardResult cb = circumbilliard(tri);

  ordered_json j = report_header("cb");
  j["vertices"] = {point_json(tri.p1()), point_json(tri.p2()), point_json(tri.p3())};
  j["mittenpunkt"] = point_json(cb.mittenpunkt);
  j["conic"] = {{"c1", num(cb.conic.c1())}, {"c2", num(cb.conic.c2())}, {"c3", num(cb.conic.c3())},
                {"c4", num(cb.conic.c4())}, {"c5", num(cb.conic.c5())}};
  j["center"] = point_json(cb.params.center);
  j["semi_major"] = num(cb.params.semi_major);
  j["semi_minor"] = num(cb.params.semi_minor);
  j["axis_angle"] = num(cb.params.axis_angle);
  j["aspect"] = num(cb.aspect);
  j["reflection_law_residual"] = num(reflection_law_residual(cb.conic, tri));
  emit(args.out, dump(j), out);
}

// ---------------------------------------------------------------- locus

struct LocusArgs {
  double a = 0, b = 0;
  std::string center;
  std::string derived;
  std::size_t n = kDefaultSampleCount;
  bool fit = false;
  std::string out;
};

ordered_json fit_json(const LocusFitReport& f)
{
  ordered_json j = {{"samples", f.samples.size()},
                    {"A", num(f.fit_A)},
                    {"B", num(f.fit_B)},
                    {"rms_residual", num(f.rms_residual)},
                    {"mean_radius", num(f.mean_radius)},
                    {"verdict", to_string(f.verdict)}};
  if (f.fitted_axes) {
    j["fitted_axes"] = {num(f.fitted_axes->first), num(f.fitted_axes->second)};
  } else {
    j["fitted_axes"] = nullptr;
  }
  return j;
}

void run_locus(const LocusArgs& args, std::ostream& out)
{
  require_samples(args.n);
  const auto id = parse_center_id(args.center);
  if (!id) throw Error(ErrorKind::InvalidInput, "unsupported center: " + args.center);
  std::optional<DerivedTriangle> derived;
  if (!args.derived.empty()) {
    derived = parse_derived_triangle(args.derived);
    if (!derived) throw Error(ErrorKind::InvalidInput, "unsupported derived triangle: " + args.derived);
  }
  const BilliardShape shape(args.a, args.b);
  const LocusSweep sweep = sweep_locus(shape, *id, derived, args.n);

  Csv csv({"t", "x", "y", "class"});
  for (const auto& s : sweep.samples) {
    csv << s.t << s.point.x() << s.point.y() << to_string(s.shape_class);
    csv.end_row();
  }

  if (!args.fit) {
    emit(args.out, csv.str(), out);
    return;
  }
  if (!args.out.empty()) write_file_atomically(args.out, csv.str());

  const PiecewiseLocusReport rep = classify_locus(sweep);
  ordered_json j = report_header("locus");
  j["a"] = num(args.a);
  j["b"] = num(args.b);
  j["center"] = to_string(*id);
  j["derived"] = derived ? ordered_json(to_string(*derived)) : ordered_json(nullptr);
  j["n"] = args.n;
  j["skipped"] = sweep.skipped;
  j["fit"] = fit_json(rep.overall);
  j["verdict"] = to_string(rep.overall.verdict);
  ordered_json pieces = ordered_json::array();
  for (const auto& [cls, f] : rep.pieces) {
    ordered_json p = fit_json(f);
    p["class"] = to_string(cls);
    pieces.push_back(std::move(p));
  }
  j["pieces"] = std::move(pieces);
  out << dump(j);
}

// ---------------------------------------------------------------- invariants

struct InvariantArgs {
  double a = 0, b = 0;
  std::size_t n = kDefaultSampleCount;
  std::string out;
};

void run_invariants(const InvariantArgs& args, std::ostream& out)
{
  require_samples(args.n);
  const BilliardShape shape(args.a, args.b);
  const InvariantReport rep = invariant_report(shape, args.n);

  ordered_json j = report_header("invariants");
  j["a"] = num(rep.a);
  j["b"] = num(rep.b);
  j["n"] = rep.n;
  j["perimeter"] = range_json(rep.perimeter);
  j["rho"] = range_json(rep.rho);
  j["rho_closed_form"] = num(rep.rho_closed_form);
  j["x9_norm"] = range_json(rep.x9_norm);
  j["act_cb_semi_major"] = range_json(rep.act_cb_major);
  j["act_cb_semi_minor"] = range_json(rep.act_cb_minor);
  j["medial_cb_semi_major"] = range_json(rep.medial_cb_major);
  j["medial_cb_semi_minor"] = range_json(rep.medial_cb_minor);
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"value", num(c.value)},
                      {"tolerance", num(c.tolerance)},
                      {"pass", c.passed}});
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = rep.all_passed();
  emit(args.out, dump(j), out);
}

// ---------------------------------------------------------------- poristic

struct PoristicArgs {
  double r = 0, R = 0;
  std::size_t n = 360;
  std::string out;
};

void run_poristic(const PoristicArgs& args, std::ostream& out)
{
  require_samples(args.n);
  if (!(args.R > 2 * args.r)) {
    throw Error(ErrorKind::InvalidShape, "poristic sweep requires R > 2r");
  }
  const PoristicShape ps(args.r, args.R);
  struct Row {
    double theta, aspect, closure;
    Point x9;
  };
  std::vector<Row> rows(args.n);
  parallel_for(args.n, [&](std::size_t k) {
    const double theta =
        2 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(args.n);
    const Triangle tri = poristic_triangle(ps, theta);
    const CircumbilliardResult cb = circumbilliard(tri);
    rows[k] = {theta, cb.aspect, std::abs(poristic_closure_residual(ps, tri)), cb.mittenpunkt};
  });

  std::vector<double> aspects;
  std::vector<Point> x9;
  double closure = 0;
  Csv csv({"theta", "aspect", "x9_x", "x9_y"});
  for (const auto& r : rows) {
    aspects.push_back(r.aspect);
    x9.push_back(r.x9);
    closure = std::max(closure, r.closure);
    csv << r.theta << r.aspect << r.x9.x() << r.x9.y();
    csv.end_row();
  }
  if (!args.out.empty()) write_file_atomically(args.out, csv.str());

  const RangeStat aspect = RangeStat::of(aspects);
  const double closed = poristic_cb_aspect(ps);
  const CircleFit circle = fit_circle(x9);
  const Point incenter = ps.incenter();
  // Published closed forms for the X9 circle, reported for comparison only.
  const Point formula_center =
      incenter + incenter * (2 * ps.R() - ps.r()) / (4 * ps.R() + ps.r());
  const double formula_radius = 2 * ps.d() * ps.d() * (4 * ps.R() + ps.r());

  ordered_json j = report_header("poristic");
  j["r"] = num(ps.r());
  j["R"] = num(ps.R());
  j["rho"] = num(ps.rho());
  j["d"] = num(ps.d());
  j["n"] = args.n;
  j["aspect"] = range_json(aspect);
  j["aspect_closed_form"] = num(closed);
  j["aspect_mean_minus_closed_form"] = num(aspect.mean - closed);
  j["max_closure_residual"] = num(closure);
  j["x9_locus"] = {{"center", point_json(circle.center)},
                   {"radius", num(circle.radius)},
                   {"rms_residual", num(circle.rms_residual)},
                   {"formula_center", point_json(formula_center)},
                   {"formula_radius", num(formula_radius)}};
  out << dump(j);
}

// ---------------------------------------------------------------- hyperbolae

struct HyperbolaArgs {
  double a = 0, b = 0;
  std::size_t n = kDefaultSampleCount;
  std::string out;
};

void run_hyperbolae(const HyperbolaArgs& args, std::ostream& out)
{
  require_samples(args.n);
  const BilliardShape shape(args.a, args.b);
  const auto profile = focal_profile(shape, args.n);
  if (profile.empty()) throw Error(ErrorKind::DegenerateConic, "focal profile is empty");

  std::vector<double> ratios;
  Csv csv({"t", "lambda", "lambda_prime", "ratio"});
  for (const auto& s : profile) {
    ratios.push_back(s.lambda_prime / s.lambda);
    csv << s.t << s.lambda << s.lambda_prime << ratios.back();
    csv.end_row();
  }
  if (!args.out.empty()) write_file_atomically(args.out, csv.str());

  const RangeStat ratio = RangeStat::of(ratios);
  const double closed = focal_ratio_closed_form(rho(shape));
  const Triangle probe = orbit(shape, profile[profile.size() / 2].t).triangle;
  const auto hits = billiard_intersections(shape, jerabek_excentral(probe));

  ordered_json j = report_header("hyperbolae");
  j["a"] = num(args.a);
  j["b"] = num(args.b);
  j["n"] = args.n;
  j["samples"] = profile.size();
  j["rho"] = num(rho(shape));
  j["ratio"] = range_json(ratio);
  j["ratio_closed_form"] = num(closed);
  j["ratio_mean_minus_closed_form"] = num(ratio.mean - closed);
  j["lambda_local_maxima"] = count_local_maxima(profile);
  j["jerabek_billiard_intersections"] = hits.size();
  out << dump(j);
}

// ---------------------------------------------------------------- render

struct RenderArgs {
  std::string input;
  std::string out;
  std::vector<std::string> overlays;
  double a = 0, b = 0;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const
  {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  }
};

std::vector<std::string> split_csv_line(const std::string& line)
{
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

Table read_table(const std::string& path)
{
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot read input file: " + path);
  Table t;
  std::string line;
  if (!std::getline(f, line)) throw Error(ErrorKind::InvalidInput, "input file is empty");
  t.header = split_csv_line(line);
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != t.header.size()) {
      throw Error(ErrorKind::InvalidInput, "ragged CSV row in " + path);
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

double cell_number(const std::string& cell)
{
  double v = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw Error(ErrorKind::InvalidInput, "not a number in CSV: '" + cell + "'");
  }
  return v;
}

std::string svg_number(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string svg_points(const std::vector<Point>& pts)
{
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += svg_number(pts[i].x()) + ',' + svg_number(-pts[i].y());
  }
  return s;
}

std::vector<Point> ellipse_outline(double ax, double by)
{
  std::vector<Point> pts;
  constexpr int kSegments = 360;
  for (int i = 0; i <= kSegments; ++i) {
    const double th = 2 * std::numbers::pi * i / kSegments;
    pts.emplace_back(ax * std::cos(th), by * std::sin(th));
  }
  return pts;
}

void run_render(const RenderArgs& args, std::ostream& out)
{
  const Table table = read_table(args.input);
  std::vector<std::vector<Point>> polylines;
  std::vector<std::vector<Point>> polygons;

  const auto cx = table.column("x"), cy = table.column("y");
  const auto cx1 = table.column("x1"), cy1 = table.column("y1");
  if (cx && cy) {
    std::vector<Point> pts;
    for (const auto& row : table.rows) pts.emplace_back(cell_number(row[*cx]), cell_number(row[*cy]));
    polylines.push_back(std::move(pts));
  } else if (cx1 && cy1 && table.column("x3") && table.column("y3")) {
    for (const auto& row : table.rows) {
      std::vector<Point> tri;
      for (int i = 1; i <= 3; ++i) {
        const auto xi = *table.column("x" + std::to_string(i));
        const auto yi = *table.column("y" + std::to_string(i));
        tri.emplace_back(cell_number(row[xi]), cell_number(row[yi]));
      }
      polygons.push_back(std::move(tri));
    }
  } else {
    throw Error(ErrorKind::InvalidInput, "CSV needs x,y or x1,y1,...,x3,y3 columns");
  }

  std::vector<std::vector<Point>> overlays;
  if (!args.overlays.empty()) {
    const BilliardShape shape(args.a, args.b);
    for (const auto& name : args.overlays) {
      if (name == "billiard") {
        overlays.push_back(ellipse_outline(shape.a(), shape.b()));
      } else if (name == "caustic") {
        const EllipseParams c = caustic(shape);
        overlays.push_back(ellipse_outline(c.semi_major, c.semi_minor));
      } else {
        throw Error(ErrorKind::InvalidInput, "unknown overlay: " + name);
      }
    }
  }

  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  auto grow = [&](const std::vector<Point>& pts) {
    for (const Point& p : pts) {
      xmin = std::min(xmin, p.x());
      xmax = std::max(xmax, p.x());
      ymin = std::min(ymin, p.y());
      ymax = std::max(ymax, p.y());
    }
  };
  for (const auto& v : polylines) grow(v);
  for (const auto& v : polygons) grow(v);
  for (const auto& v : overlays) grow(v);
  if (!std::isfinite(xmin)) throw Error(ErrorKind::InvalidInput, "nothing to render");

  const double extent = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double margin = 0.05 * extent;
  const double stroke = 0.004 * extent;
  // SVG y grows downward; coordinates are emitted with y negated.
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << svg_number(xmin - margin) << ' '
      << svg_number(-ymax - margin) << ' ' << svg_number(xmax - xmin + 2 * margin) << ' '
      << svg_number(ymax - ymin + 2 * margin) << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
  for (const auto& v : overlays) {
    svg << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << svg_number(stroke)
        << "\" stroke-dasharray=\"" << svg_number(4 * stroke) << ' ' << svg_number(3 * stroke)
        << "\" points=\"" << svg_points(v) << "\"/>\n";
  }
  for (const auto& v : polygons) {
    svg << "  <polygon fill=\"none\" stroke=\"steelblue\" stroke-opacity=\"0.5\" stroke-width=\""
        << svg_number(stroke / 2) << "\" points=\"" << svg_points(v) << "\"/>\n";
  }
  for (const auto& v : polylines) {
    svg << "  <polyline fill=\"none\" stroke=\"crimson\" stroke-width=\"" << svg_number(stroke)
        << "\" points=\"" << svg_points(v) << "\"/>\n";
  }
  svg << "</svg>\n";
  emit(args.out, svg.str(), out);
}

void write_error(std::ostream& err, std::string_view kind, std::string_view message)
{
  ordered_json j = {{"schema_version", kSchemaVersion},
                    {"error", kind},
                    {"message", message}};
  err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Elliptic-billiard 3-periodics, circumbilliards and their invariants", "orbitconics"};
  app.require_subcommand(1);

  FamilyArgs family;
  auto* family_cmd = app.add_subcommand("family", "3-periodic samples over the family");
  family_cmd->add_option("--a", family.a, "billiard semi-major axis")->required();
  family_cmd->add_option("--b", family.b, "billiard semi-minor axis")->required();
  family_cmd->add_option("--n", family.n, "sample count")->capture_default_str();
  family_cmd->add_option("--format", family.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  family_cmd->add_option("--out", family.out, "output file (default stdout)");

  CbArgs cb;
  auto* cb_cmd = app.add_subcommand("cb", "circumbilliard of a triangle");
  cb_cmd->add_option("--vertices", cb.vertices, "x1,y1,x2,y2,x3,y3")->required();
  cb_cmd->add_option("--out", cb.out, "output file (default stdout)");

  LocusArgs locus;
  auto* locus_cmd = app.add_subcommand("locus", "sweep a triangle center over the family");
  locus_cmd->add_option("--a", locus.a)->required();
  locus_cmd->add_option("--b", locus.b)->required();
  locus_cmd->add_option("--center", locus.center, "X<k> or X6star")->required();
  locus_cmd->add_option("--derived", locus.derived, "excentral, act, medial or orthic");
  locus_cmd->add_option("--n", locus.n)->capture_default_str();
  locus_cmd->add_flag("--fit", locus.fit, "fit and classify the locus (JSON report on stdout)");
  locus_cmd->add_option("--out", locus.out, "CSV of locus points");

  InvariantArgs inv;
  auto* inv_cmd = app.add_subcommand("invariants", "conservation checks over the family");
  inv_cmd->add_option("--a", inv.a)->required();
  inv_cmd->add_option("--b", inv.b)->required();
  inv_cmd->add_option("--n", inv.n)->capture_default_str();
  inv_cmd->add_option("--out", inv.out, "output file (default stdout)");

  PoristicArgs por;
  auto* por_cmd = app.add_subcommand("poristic", "circumbilliard aspect over the poristic family");
  por_cmd->add_option("--r", por.r, "inradius")->required();
  por_cmd->add_option("--R", por.R, "circumradius")->required();
  por_cmd->add_option("--n", por.n)->capture_default_str();
  por_cmd->add_option("--out", por.out, "CSV of per-sample aspect and X9");

  HyperbolaArgs hyp;
  auto* hyp_cmd = app.add_subcommand("hyperbolae", "Feuerbach / excentral Jerabek focal lengths");
  hyp_cmd->add_option("--a", hyp.a)->required();
  hyp_cmd->add_option("--b", hyp.b)->required();
  hyp_cmd->add_option("--n", hyp.n)->capture_default_str();
  hyp_cmd->add_option("--out", hyp.out, "CSV of the focal profile");

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "SVG of a CSV produced by another command");
  render_cmd->add_option("--input", render.input)->required();
  render_cmd->add_option("--out", render.out, "SVG file (default stdout)");
  render_cmd->add_option("--overlay", render.overlays, "billiard and/or caustic")
      ->check(CLI::IsMember({"billiard", "caustic"}));
  render_cmd->add_option("--a", render.a, "billiard semi-major axis for overlays");
  render_cmd->add_option("--b", render.b, "billiard semi-minor axis for overlays");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "invalid_arguments", e.what());
    return kExitInvalidArguments;
  }

  try {
    if (*family_cmd) run_family(family, out);
    if (*cb_cmd) run_cb(cb, out);
    if (*locus_cmd) run_locus(locus, out);
    if (*inv_cmd) run_invariants(inv, out);
    if (*por_cmd) run_poristic(por, out);
    if (*hyp_cmd) run_hyperbolae(hyp, out);
    if (*render_cmd) run_render(render, out);
  } catch (const Error& e) {
    write_error(err, to_string(e.kind()), e.what());
    return e.is_usage_error() ? kExitInvalidArguments : kExitNumericalFailure;
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what());
    return kExitNumericalFailure;
  }
  return kExitOk;
}

}  // namespace orbitconics::cli
