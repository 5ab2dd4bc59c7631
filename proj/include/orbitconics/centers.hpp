#pragma once

#include <orbitconics/kernel.hpp>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace orbitconics {

/// Kimberling index of a supported triangle center. X6Star is the center of
/// the orthic triangle's circumbilliard (see orthic_cb_center).
enum class CenterId : int {
  X1 = 1,
  X2 = 2,
  X3 = 3,
  X4 = 4,
  X5 = 5,
  X6 = 6,
  X7 = 7,
  X8 = 8,
  X9 = 9,
  X10 = 10,
  X11 = 11,
  X40 = 40,
  X69 = 69,
  X100 = 100,
  X142 = 142,
  X144 = 144,
  X168 = 168,
  X1156 = 1156,
  X6Star = -6,
};

inline constexpr std::array<CenterId, 19> all_center_ids{
    CenterId::X1,   CenterId::X2,   CenterId::X3,    CenterId::X4,    CenterId::X5,
    CenterId::X6,   CenterId::X7,   CenterId::X8,    CenterId::X9,    CenterId::X10,
    CenterId::X11,  CenterId::X40,  CenterId::X69,   CenterId::X100,  CenterId::X142,
    CenterId::X144, CenterId::X168, CenterId::X1156, CenterId::X6Star};

/// Accepts "X<index>" for supported indices and the literal "X6star".
std::optional<CenterId> parse_center_id(std::string_view text);
std::string to_string(CenterId id);

/// Homogeneous trilinear coordinates t1 : t2 : t3.
struct Trilinears {
  double t1 = 0;
  double t2 = 0;
  double t3 = 0;
};

enum class ShapeClass { Acute, Right, Obtuse };
std::string_view to_string(ShapeClass c);

/// Weighted vertex average with weights s_i t_i.
Point trilinear_to_cartesian(const Triangle& t, const Trilinears& tri);

/// Vertex cosines from the law of cosines (index i is the angle at vertex i).
std::array<double, 3> vertex_cosines(const Triangle& t);

/// Acute / right / obtuse from the smallest vertex cosine with a 1e-12
/// dead-band around zero.
ShapeClass classify_triangle(const Triangle& t);

/// Index of the vertex with the largest angle.
int widest_vertex(const Triangle& t);

double inradius(const Triangle& t);
double circumradius(const Triangle& t);

Point center(const Triangle& t, CenterId id);

/// True when p sits farther than 1e6 times the triangle's scale from its
/// centroid (e.g. X4 of a nearly right triangle).
bool is_far_field(const Triangle& t, const Point& p);

Triangle excentral(const Triangle& t);
Triangle medial(const Triangle& t);
/// Anticomplementary triangle: vertex i is P_j + P_k - P_i.
Triangle act(const Triangle& t);
/// Feet of the three altitudes. Throws RightTriangle when the orthic collapses.
Triangle orthic(const Triangle& t);

/// Foot of the perpendicular from p onto the line through a and b.
Point foot_of_perpendicular(const Point& p, const Point& a, const Point& b);

struct OrthicCenter {
  Point point;
  /// Set when the triangle is right-angled and `point` is the limit value
  /// (midpoint of the altitude from the right-angle vertex).
  bool right_limit = false;
};

/// Center of the orthic triangle's circumbilliard: X6 for acute triangles,
/// X6 of (P_j, P_k, X4) when obtuse at P_i.
OrthicCenter orthic_cb_center(const Triangle& t);

}  // namespace orbitconics
