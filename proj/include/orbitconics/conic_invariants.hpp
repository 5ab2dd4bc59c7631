#pragma once

#include <orbitconics/billiard.hpp>
#include <orbitconics/kernel.hpp>

#include <utility>
#include <vector>

namespace orbitconics {

/// Triangles sharing a circumcircle (center origin, radius R) and an incircle
/// (center (d, 0), radius r), with d = sqrt(R (R - 2r)).
class PoristicShape {
 public:
  PoristicShape(double r, double R);

  double r() const { return r_; }
  double R() const { return R_; }
  double d() const { return std::sqrt(R_ * (R_ - 2 * r_)); }
  double rho() const { return r_ / R_; }
  Point incenter() const { return {d(), 0}; }

 private:
  double r_;
  double R_;
};

/// Vertex V1 = R (cos theta, sin theta); V2, V3 are where the two tangents
/// from V1 to the incircle meet the circumcircle again. Throws ClosureFailure
/// if V2V3 is not tangent to the incircle within 1e-9 R.
Triangle poristic_triangle(const PoristicShape& ps, double theta);

/// Distance from the incenter to side V2V3 minus r.
double poristic_closure_residual(const PoristicShape& ps, const Triangle& t);

/// Invariant circumbilliard aspect ratio of the poristic family,
/// sqrt((rho^2 + 2 (rho + 1) sqrt(1 - 2 rho) + 2) / (rho (rho + 4))).
double poristic_cb_aspect(double rho);
double poristic_cb_aspect(const PoristicShape& ps);

/// c1 x + c2 y + c3 xy = 0: a rectangular hyperbola through the origin with
/// axis-parallel asymptotes.
struct RectHyperbola {
  double c1 = 0;
  double c2 = 0;
  double c3 = 0;

  double eval(const Point& p) const { return c1 * p.x() + c2 * p.y() + c3 * p.x() * p.y(); }
  Point center() const { return {-c2 / c3, -c1 / c3}; }
  /// k in (x - cx)(y - cy) = k.
  double product_constant() const { return c1 * c2 / (c3 * c3); }
  /// sqrt(|8 c1 c2 / c3^2|)
  double focal_length() const { return std::sqrt(std::abs(8 * product_constant())); }
  /// eval scaled so residuals are comparable across samples.
  double normalized_eval(const Point& p) const;
};

/// General axis-parallel rectangular hyperbola k0 + k1 x + k2 y + k3 xy = 0.
struct ShiftedRectHyperbola {
  double k0 = 0;
  double k1 = 0;
  double k2 = 0;
  double k3 = 0;
};

/// The hyperbola with every point moved by `offset`.
ShiftedRectHyperbola translate(const RectHyperbola& h, const Point& offset);

/// Feuerbach circumhyperbola of a 3-periodic whose Mittenpunkt is at the
/// origin. Throws DegenerateConic for isosceles-like configurations where it
/// splits into a line pair.
RectHyperbola feuerbach_hyperbola(const Triangle& t);

/// Jerabek hyperbola of the excentral triangle (same construction applied to
/// the excenters).
RectHyperbola jerabek_excentral(const Triangle& t);

/// Real intersections of the hyperbola with the billiard boundary: sign
/// changes over `samples` boundary points, refined by bisection.
std::vector<Point> billiard_intersections(const BilliardShape& shape, const RectHyperbola& h,
                                          int samples = 4096);

struct FocalSample {
  double t;
  double lambda;        // Feuerbach focal length
  double lambda_prime;  // excentral Jerabek focal length
};

/// Focal lengths for n parameters evenly spaced in (0, pi/2), dropping those
/// within 1e-3 rad of the isosceles endpoints.
std::vector<FocalSample> focal_profile(const BilliardShape& shape, std::size_t n);

/// Number of strict interior local maxima of lambda along the profile.
std::size_t count_local_maxima(const std::vector<FocalSample>& profile);

/// sqrt(2 / rho)
double focal_ratio_closed_form(double rho);

enum class ExcentralInconic { X3Centered, MacBeath };

struct InconicAxes {
  double major = 0;
  double minor = 0;
  /// Ratio from the rho-only closed form; equals major / minor.
  double ratio_closed_form = 0;
};

/// Axes of the excentral triangle's X3-centered inconic (R + d, R - d) or its
/// MacBeath inconic (R, sqrt(R^2 - d^2)), from the reference r and R.
InconicAxes excentral_inconic_axes(const Triangle& t, ExcentralInconic which);

/// Where the inconic is centered, in reference coordinates: X40 for the
/// X3-centered one, X3 for MacBeath.
Point excentral_inconic_center(const Triangle& t, ExcentralInconic which);

}  // namespace orbitconics
