#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

namespace buffon {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Absolute tolerance (length units) below which a signed distance counts as
// a tangency, an endpoint hit or a collinearity.
inline constexpr double kDegeneracyTol = 1e-9;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateLineError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Vec2 rotate(Vec2 v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Wraps an angle into [0, period).
double wrap_angle(double angle, double period = kTwoPi);

/// The line { q : q . (cos theta, sin theta) = offset }.
///
/// Canonical form has theta in [0, pi). In these coordinates the kinematic
/// measure on lines is d(offset) d(theta).
struct LineCoords {
  double theta = 0.0;
  double offset = 0.0;

  Vec2 normal() const { return unit(theta); }
  Vec2 direction() const { return {-std::sin(theta), std::cos(theta)}; }
  double signed_distance(Vec2 q) const { return dot(q, normal()) - offset; }
  Vec2 foot() const { return offset * normal(); }

  friend bool operator==(const LineCoords&, const LineCoords&) = default;
};

/// (theta, offset) and (theta + pi, -offset) name the same line; returns the
/// representative with theta in [0, pi). Throws std::invalid_argument on
/// non-finite input.
LineCoords normalize_line(double theta, double offset);

struct Segment {
  Vec2 p0;
  Vec2 p1;
};

struct Circle {
  Vec2 center;
  double radius = 1.0;
};

// Counterclockwise arc from angle_start through angle_start + angle_span.
struct Arc {
  Vec2 center;
  double radius = 1.0;
  double angle_start = 0.0;
  double angle_span = kPi;
};

using Primitive = std::variant<Segment, Circle, Arc>;

Primitive make_segment(Vec2 p0, Vec2 p1);
Primitive make_circle(Vec2 center, double radius);
// A span of 2*pi (within 1e-12) yields a Circle.
Primitive make_arc(Vec2 center, double radius, double angle_start, double angle_span);

// Throws std::invalid_argument for coincident segment endpoints, non-positive
// radii, spans outside (0, 2*pi] or non-finite coordinates.
void validate(const Primitive& prim);

double length(const Primitive& prim);

// True when the point at `angle` on an arc's circle lies on the arc, allowing
// `slack` radians beyond either end.
bool arc_contains_angle(const Arc& arc, double angle, double slack = 0.0);
Vec2 arc_point(const Arc& arc, double param);  // param in [0, angle_span]

struct IntersectionResult {
  int count = 0;
  bool degenerate = false;

  IntersectionResult& operator+=(const IntersectionResult& other) {
    count += other.count;
    degenerate = degenerate || other.degenerate;
    return *this;
  }
};

/// Transversal crossings of a line with one primitive. Tangencies, endpoint
/// hits and collinear segments set `degenerate` and contribute nothing to
/// `count`.
IntersectionResult intersect_line_primitive(const LineCoords& line, const Primitive& prim,
                                            double tol = kDegeneracyTol);

/// An interval (lo, hi) of offsets along a fixed normal over which a piece of a
/// primitive is crossed exactly once. For a fixed normal direction the
/// crossing count of a primitive at offset p is the number of its pieces with
/// lo < p < hi: segments give one piece, circles two, arcs one per monotone
/// stretch.
struct ProjectionPiece {
  double lo = 0.0;
  double hi = 0.0;
};

void append_projection_pieces(const Primitive& prim, double theta,
                              std::vector<ProjectionPiece>& out);
// Same, with normal == unit(theta) supplied by the caller.
void append_projection_pieces(const Primitive& prim, double theta, Vec2 normal,
                              std::vector<ProjectionPiece>& out);

// Points whose projections bound the pieces above (segment and arc endpoints,
// circle centers). Breakpoints move with d/dtheta bounded by the norm of the
// farthest such anchor.
double breakpoint_anchor_radius(const Primitive& prim);

/// x -> R(rotation) x + translation.
struct RigidMotion {
  double rotation = 0.0;
  Vec2 translation;

  Vec2 apply(Vec2 p) const { return rotate(p, rotation) + translation; }
  RigidMotion inverse() const {
    return {-rotation, -rotate(translation, -rotation)};
  }
};

LineCoords apply_rigid_motion(const LineCoords& line, const RigidMotion& motion);
Primitive apply_rigid_motion(const Primitive& prim, const RigidMotion& motion);

}  // namespace buffon
