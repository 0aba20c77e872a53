#include "buffon/geom.hpp"

#include <algorithm>
#include <array>

namespace buffon {

namespace {

bool finite(Vec2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

IntersectionResult intersect_circle(const LineCoords& line, const Circle& c, double tol) {
  const double d = std::abs(line.signed_distance(c.center));
  if (d < c.radius - tol) return {2, false};
  if (d > c.radius + tol) return {0, false};
  return {0, true};
}

IntersectionResult intersect_segment(const LineCoords& line, const Segment& s, double tol) {
  const double s0 = line.signed_distance(s.p0);
  const double s1 = line.signed_distance(s.p1);
  if (std::abs(s0) <= tol || std::abs(s1) <= tol) return {0, true};
  return {(s0 < 0.0) != (s1 < 0.0) ? 1 : 0, false};
}

IntersectionResult intersect_arc(const LineCoords& line, const Arc& a, double tol) {
  const double d = line.signed_distance(a.center);
  if (std::abs(d) > a.radius + tol) return {0, false};

  IntersectionResult result;
  if (std::abs(line.signed_distance(arc_point(a, 0.0))) <= tol ||
      std::abs(line.signed_distance(arc_point(a, a.angle_span))) <= tol) {
    result.degenerate = true;
  }

  const Vec2 n = line.normal();
  if (std::abs(d) >= a.radius - tol) {
    // Tangent band: the crossing points sit within acos((r - tol)/r) of the
    // tangent point.
    const Vec2 toward = d > 0.0 ? -n : n;
    const double slack = std::sqrt(2.0 * tol / a.radius) + 1e-12;
    if (arc_contains_angle(a, std::atan2(toward.y, toward.x), slack)) result.degenerate = true;
    return result;
  }

  const Vec2 foot = a.center - d * n;
  const double h = std::sqrt(a.radius * a.radius - d * d);
  const Vec2 dir = line.direction();
  for (const Vec2 q : {foot + h * dir, foot - h * dir}) {
    const Vec2 r = q - a.center;
    const double rel = wrap_angle(std::atan2(r.y, r.x) - a.angle_start);
    if (rel > 0.0 && rel < a.angle_span) ++result.count;
  }
  if (result.degenerate) result.count = 0;
  return result;
}

}  // namespace

double wrap_angle(double angle, double period) {
  double r = std::fmod(angle, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

LineCoords normalize_line(double theta, double offset) {
  if (!std::isfinite(theta) || !std::isfinite(offset)) {
    throw std::invalid_argument("normalize_line: non-finite line coordinates");
  }
  if (theta >= 0.0 && theta < kPi) return {theta, offset};
  double t = wrap_angle(theta);
  if (t >= kPi) {
    t -= kPi;
    offset = -offset;
  }
  // t - pi can round up to pi itself.
  if (t >= kPi) t = 0.0;
  return {t, offset};
}

Primitive make_segment(Vec2 p0, Vec2 p1) {
  Primitive p = Segment{p0, p1};
  validate(p);
  return p;
}

Primitive make_circle(Vec2 center, double radius) {
  Primitive p = Circle{center, radius};
  validate(p);
  return p;
}

Primitive make_arc(Vec2 center, double radius, double angle_start, double angle_span) {
  if (std::abs(angle_span - kTwoPi) <= 1e-12) return make_circle(center, radius);
  Primitive p = Arc{center, radius, wrap_angle(angle_start), angle_span};
  validate(p);
  return p;
}

void validate(const Primitive& prim) {
  std::visit(Overloaded{
                 [](const Segment& s) {
                   if (!finite(s.p0) || !finite(s.p1))
                     throw std::invalid_argument("segment: non-finite endpoint");
                   if (s.p0 == s.p1) throw std::invalid_argument("segment: coincident endpoints");
                 },
                 [](const Circle& c) {
                   if (!finite(c.center) || !std::isfinite(c.radius))
                     throw std::invalid_argument("circle: non-finite parameters");
                   if (!(c.radius > 0.0)) throw std::invalid_argument("circle: radius must be positive");
                 },
                 [](const Arc& a) {
                   if (!finite(a.center) || !std::isfinite(a.radius) || !std::isfinite(a.angle_start) ||
                       !std::isfinite(a.angle_span))
                     throw std::invalid_argument("arc: non-finite parameters");
                   if (!(a.radius > 0.0)) throw std::invalid_argument("arc: radius must be positive");
                   if (!(a.angle_span > 0.0) || a.angle_span > kTwoPi)
                     throw std::invalid_argument("arc: span must lie in (0, 2*pi]");
                 },
             },
             prim);
}

double length(const Primitive& prim) {
  return std::visit(Overloaded{
                        [](const Segment& s) { return norm(s.p1 - s.p0); },
                        [](const Circle& c) { return kTwoPi * c.radius; },
                        [](const Arc& a) { return a.radius * a.angle_span; },
                    },
                    prim);
}

bool arc_contains_angle(const Arc& arc, double angle, double slack) {
  const double rel = wrap_angle(angle - arc.angle_start);
  return rel <= arc.angle_span + slack || rel >= kTwoPi - slack;
}

Vec2 arc_point(const Arc& arc, double param) {
  return arc.center + arc.radius * unit(arc.angle_start + param);
}

IntersectionResult intersect_line_primitive(const LineCoords& line, const Primitive& prim, double tol) {
  return std::visit(Overloaded{
                        [&](const Segment& s) { return intersect_segment(line, s, tol); },
                        [&](const Circle& c) { return intersect_circle(line, c, tol); },
                        [&](const Arc& a) { return intersect_arc(line, a, tol); },
                    },
                    prim);
}

void append_projection_pieces(const Primitive& prim, double theta, std::vector<ProjectionPiece>& out) {
  append_projection_pieces(prim, theta, unit(theta), out);
}

void append_projection_pieces(const Primitive& prim, double theta, Vec2 n, std::vector<ProjectionPiece>& out) {
  std::visit(Overloaded{
                 [&](const Segment& s) {
                   const double a = dot(s.p0, n);
                   const double b = dot(s.p1, n);
                   out.push_back({std::min(a, b), std::max(a, b)});
                 },
                 [&](const Circle& c) {
                   const double m = dot(c.center, n);
                   out.push_back({m - c.radius, m + c.radius});
                   out.push_back({m - c.radius, m + c.radius});
                 },
                 [&](const Arc& a) {
                   // Split at the parameters where the projection is extremal.
                   std::array<double, 4> cuts{};
                   std::size_t count = 0;
                   cuts[count++] = 0.0;
                   for (const double extreme : {theta, theta + kPi}) {
                     const double rel = wrap_angle(extreme - a.angle_start);
                     if (rel > 0.0 && rel < a.angle_span) cuts[count++] = rel;
                   }
                   std::sort(cuts.begin() + 1, cuts.begin() + count);
                   cuts[count++] = a.angle_span;
                   const double m = dot(a.center, n);
                   auto proj = [&](double param) {
                     return m + a.radius * std::cos(a.angle_start + param - theta);
                   };
                   for (std::size_t i = 0; i + 1 < count; ++i) {
                     const double u = proj(cuts[i]);
                     const double v = proj(cuts[i + 1]);
                     out.push_back({std::min(u, v), std::max(u, v)});
                   }
                 },
             },
             prim);
}

double breakpoint_anchor_radius(const Primitive& prim) {
  return std::visit(Overloaded{
                        [](const Segment& s) { return std::max(norm(s.p0), norm(s.p1)); },
                        [](const Circle& c) { return norm(c.center); },
                        [](const Arc& a) {
                          return std::max({norm(a.center), norm(arc_point(a, 0.0)),
                                           norm(arc_point(a, a.angle_span))});
                        },
                    },
                    prim);
}

LineCoords apply_rigid_motion(const LineCoords& line, const RigidMotion& motion) {
  const double theta = line.theta + motion.rotation;
  const double offset = line.offset + dot(motion.translation, unit(theta));
  return normalize_line(theta, offset);
}

Primitive apply_rigid_motion(const Primitive& prim, const RigidMotion& motion) {
  return std::visit(Overloaded{
                        [&](const Segment& s) -> Primitive {
                          return Segment{motion.apply(s.p0), motion.apply(s.p1)};
                        },
                        [&](const Circle& c) -> Primitive {
                          return Circle{motion.apply(c.center), c.radius};
                        },
                        [&](const Arc& a) -> Primitive {
                          return Arc{motion.apply(a.center), a.radius,
                                     wrap_angle(a.angle_start + motion.rotation), a.angle_span};
                        },
                    },
                    prim);
}

}  // namespace buffon
