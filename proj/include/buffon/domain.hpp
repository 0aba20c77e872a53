#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "buffon/geom.hpp"

namespace buffon {

struct Disk {
  Vec2 center;
  double radius = 1.0;
};

// Strictly convex, counterclockwise, at least three vertices.
struct ConvexPolygon {
  std::vector<Vec2> vertices;
};

// Constant-width body bounded by three arcs, each centered at one corner of
// an equilateral triangle (counterclockwise corners) and joining the other two.
struct Reuleaux {
  std::array<Vec2, 3> corners;
};

struct Chord {
  Vec2 a;
  Vec2 b;
  double length = 0.0;
  bool touches_corner = false;  // polygon vertex or Reuleaux corner within tolerance
};

struct DomainMetrics {
  double area = 0.0;
  double diameter = 0.0;
  double circumradius = 0.0;  // about the origin
};

/// A bounded convex planar domain. Metrics are computed once at construction.
class ConvexDomain {
 public:
  using Shape = std::variant<Disk, ConvexPolygon, Reuleaux>;

  static ConvexDomain disk(double radius = 1.0, Vec2 center = {});
  static ConvexDomain polygon(std::vector<Vec2> ccw_vertices);
  // Axis-aligned square [x0, x0 + side] x [y0, y0 + side].
  static ConvexDomain square(double side, Vec2 lower_left = {});
  // Width-`width` Reuleaux triangle whose centroid is `center`; with zero
  // rotation one corner points along +y.
  static ConvexDomain reuleaux(double width, Vec2 center = {}, double rotation = 0.0);
  static ConvexDomain reuleaux_from_corners(const std::array<Vec2, 3>& ccw_corners);

  const Shape& shape() const { return shape_; }
  double area() const { return metrics_.area; }
  double diameter() const { return metrics_.diameter; }
  double circumradius() const { return metrics_.circumradius; }
  const DomainMetrics& metrics() const { return metrics_; }

  struct Support {
    double lo = 0.0;
    double hi = 0.0;
  };
  // Offsets p for which the line (theta, p) meets the domain.
  Support support(double theta) const;

  std::optional<Chord> chord(const LineCoords& line) const;
  double chord_length(const LineCoords& line) const;
  // Offset maximizing p -> chord_length((theta, p)).
  double chord_argmax(double theta) const;
  // Offsets at which p -> chord_length is not smooth inside the support.
  std::vector<double> chord_kinks(double theta) const;

  bool contains(Vec2 p, double tol = kDegeneracyTol) const;
  bool contains(const Primitive& prim, double tol = kDegeneracyTol) const;

 private:
  explicit ConvexDomain(Shape shape);

  Shape shape_;
  DomainMetrics metrics_;
};

/// p -> chord_length((theta, p)) for one fixed angle. Disks use the closed
/// form and polygons interpolate linearly between vertex projections.
class ChordProfile {
 public:
  ChordProfile(const ConvexDomain& domain, double theta);
  double operator()(double offset) const;

 private:
  const ConvexDomain* domain_;
  double theta_;
  int kind_ = 0;
  double center_offset_ = 0.0;
  double radius_ = 0.0;
  std::vector<double> knots_;
  std::vector<double> values_;
};

DomainMetrics domain_metrics(const ConvexDomain& domain);
ConvexDomain apply_rigid_motion(const ConvexDomain& domain, const RigidMotion& motion);

// The arcs bounding a Reuleaux triangle, in corner order.
std::array<Arc, 3> reuleaux_arcs(const Reuleaux& r);

}  // namespace buffon
