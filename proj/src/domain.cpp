#include "buffon/domain.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "buffon/numeric.hpp"

namespace buffon {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kInf = std::numeric_limits<double>::infinity();

double reuleaux_width(const Reuleaux& r) { return norm(r.corners[1] - r.corners[0]); }

Arc as_arc(const Primitive& prim) {
  if (const auto* c = std::get_if<Circle>(&prim)) return Arc{c->center, c->radius, 0.0, kTwoPi};
  return std::get<Arc>(prim);
}

// Largest distance from x to a point of the arc.
double max_distance_on_arc(const Arc& arc, Vec2 x) {
  const Vec2 rel = arc.center - x;
  const double d = norm(rel);
  if (d == 0.0) return arc.radius;
  if (arc_contains_angle(arc, std::atan2(rel.y, rel.x))) return d + arc.radius;
  return std::max(norm(arc_point(arc, 0.0) - x), norm(arc_point(arc, arc.angle_span) - x));
}

// Smallest value of p . m over the arc, m a unit vector.
double min_projection_on_arc(const Arc& arc, Vec2 m) {
  if (arc_contains_angle(arc, std::atan2(-m.y, -m.x))) return dot(arc.center, m) - arc.radius;
  return std::min(dot(arc_point(arc, 0.0), m), dot(arc_point(arc, arc.angle_span), m));
}

void check_polygon(const std::vector<Vec2>& v) {
  if (v.size() < 3) throw std::invalid_argument("polygon: needs at least 3 vertices");
  double turning = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2 a = v[i];
    const Vec2 b = v[(i + 1) % v.size()];
    const Vec2 c = v[(i + 2) % v.size()];
    if (!std::isfinite(a.x) || !std::isfinite(a.y)) throw std::invalid_argument("polygon: non-finite vertex");
    const Vec2 e0 = b - a;
    const Vec2 e1 = c - b;
    if (!(cross(e0, e1) > 0.0)) {
      throw std::invalid_argument("polygon: vertices must be strictly convex and counterclockwise");
    }
    turning += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  if (std::abs(turning - kTwoPi) > 1e-9) throw std::invalid_argument("polygon: boundary is self-intersecting");
}

DomainMetrics compute_metrics(const ConvexDomain::Shape& shape) {
  return std::visit(
      Overloaded{
          [](const Disk& d) {
            return DomainMetrics{kPi * d.radius * d.radius, 2.0 * d.radius, norm(d.center) + d.radius};
          },
          [](const ConvexPolygon& p) {
            const auto& v = p.vertices;
            double area = 0.0;
            double diam = 0.0;
            double circ = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) {
              area += cross(v[i], v[(i + 1) % v.size()]);
              circ = std::max(circ, norm(v[i]));
              for (std::size_t j = i + 1; j < v.size(); ++j) diam = std::max(diam, norm(v[j] - v[i]));
            }
            return DomainMetrics{0.5 * area, diam, circ};
          },
          [](const Reuleaux& r) {
            const double w = reuleaux_width(r);
            double circ = 0.0;
            for (const Arc& arc : reuleaux_arcs(r)) circ = std::max(circ, max_distance_on_arc(arc, {}));
            return DomainMetrics{0.5 * (kPi - std::sqrt(3.0)) * w * w, w, circ};
          },
      },
      shape);
}

}  // namespace

std::array<Arc, 3> reuleaux_arcs(const Reuleaux& r) {
  std::array<Arc, 3> arcs{};
  const double w = reuleaux_width(r);
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec2 a = r.corners[i];
    const Vec2 b = r.corners[(i + 1) % 3] - a;
    arcs[i] = Arc{a, w, wrap_angle(std::atan2(b.y, b.x)), kPi / 3.0};
  }
  return arcs;
}

ConvexDomain::ConvexDomain(Shape shape) : shape_(std::move(shape)), metrics_(compute_metrics(shape_)) {}

ConvexDomain ConvexDomain::disk(double radius, Vec2 center) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("disk: radius must be positive");
  if (!std::isfinite(center.x) || !std::isfinite(center.y)) throw std::invalid_argument("disk: non-finite center");
  return ConvexDomain(Disk{center, radius});
}

ConvexDomain ConvexDomain::polygon(std::vector<Vec2> ccw_vertices) {
  check_polygon(ccw_vertices);
  return ConvexDomain(ConvexPolygon{std::move(ccw_vertices)});
}

ConvexDomain ConvexDomain::square(double side, Vec2 lower_left) {
  if (!(side > 0.0) || !std::isfinite(side)) throw std::invalid_argument("square: side must be positive");
  const Vec2 o = lower_left;
  return polygon({o, o + Vec2{side, 0.0}, o + Vec2{side, side}, o + Vec2{0.0, side}});
}

ConvexDomain ConvexDomain::reuleaux(double width, Vec2 center, double rotation) {
  if (!(width > 0.0) || !std::isfinite(width)) throw std::invalid_argument("reuleaux: width must be positive");
  const double rc = width / std::sqrt(3.0);
  std::array<Vec2, 3> corners{};
  for (int i = 0; i < 3; ++i) corners[i] = center + rc * unit(kPi / 2.0 + rotation + kTwoPi * i / 3.0);
  return ConvexDomain(Reuleaux{corners});
}

ConvexDomain ConvexDomain::reuleaux_from_corners(const std::array<Vec2, 3>& c) {
  const double w0 = norm(c[1] - c[0]);
  const double w1 = norm(c[2] - c[1]);
  const double w2 = norm(c[0] - c[2]);
  if (!(w0 > 0.0) || std::abs(w1 - w0) > 1e-9 * w0 || std::abs(w2 - w0) > 1e-9 * w0) {
    throw std::invalid_argument("reuleaux: corners must form an equilateral triangle");
  }
  if (!(cross(c[1] - c[0], c[2] - c[0]) > 0.0)) {
    throw std::invalid_argument("reuleaux: corners must be counterclockwise");
  }
  return ConvexDomain(Reuleaux{c});
}

ConvexDomain::Support ConvexDomain::support(double theta) const {
  const Vec2 n = unit(theta);
  return std::visit(Overloaded{
                        [&](const Disk& d) {
                          const double m = dot(d.center, n);
                          return Support{m - d.radius, m + d.radius};
                        },
                        [&](const ConvexPolygon& p) {
                          Support s{kInf, -kInf};
                          for (const Vec2 v : p.vertices) {
                            s.lo = std::min(s.lo, dot(v, n));
                            s.hi = std::max(s.hi, dot(v, n));
                          }
                          return s;
                        },
                        [&](const Reuleaux& r) {
                          Support s{kInf, -kInf};
                          for (const Vec2 v : r.corners) {
                            s.lo = std::min(s.lo, dot(v, n));
                            s.hi = std::max(s.hi, dot(v, n));
                          }
                          for (const Arc& arc : reuleaux_arcs(r)) {
                            if (arc_contains_angle(arc, theta)) s.hi = std::max(s.hi, dot(arc.center, n) + arc.radius);
                            if (arc_contains_angle(arc, theta + kPi))
                              s.lo = std::min(s.lo, dot(arc.center, n) - arc.radius);
                          }
                          return s;
                        },
                    },
                    shape_);
}

std::optional<Chord> ConvexDomain::chord(const LineCoords& line) const {
  const Vec2 q = line.foot();
  const Vec2 dir = line.direction();
  return std::visit(
      Overloaded{
          [&](const Disk& d) -> std::optional<Chord> {
            const double s = line.signed_distance(d.center);
            if (std::abs(s) >= d.radius) return std::nullopt;
            const double h = std::sqrt((d.radius - s) * (d.radius + s));
            const Vec2 foot = d.center - s * line.normal();
            return Chord{foot - h * dir, foot + h * dir, 2.0 * h, false};
          },
          [&](const ConvexPolygon& p) -> std::optional<Chord> {
            double t_lo = -kInf;
            double t_hi = kInf;
            const auto& v = p.vertices;
            for (std::size_t i = 0; i < v.size(); ++i) {
              const Vec2 e = v[(i + 1) % v.size()] - v[i];
              const Vec2 inward{-e.y, e.x};
              const double num = dot(q - v[i], inward);
              const double den = dot(dir, inward);
              if (den == 0.0) {
                if (num < 0.0) return std::nullopt;
                continue;
              }
              const double t = -num / den;
              if (den > 0.0) {
                t_lo = std::max(t_lo, t);
              } else {
                t_hi = std::min(t_hi, t);
              }
            }
            if (!(t_hi > t_lo)) return std::nullopt;
            Chord c{q + t_lo * dir, q + t_hi * dir, t_hi - t_lo, false};
            for (const Vec2 vert : v) {
              if (norm(vert - c.a) <= kDegeneracyTol || norm(vert - c.b) <= kDegeneracyTol) c.touches_corner = true;
            }
            return c;
          },
          [&](const Reuleaux& r) -> std::optional<Chord> {
            double t_lo = kInf;
            double t_hi = -kInf;
            for (const Arc& arc : reuleaux_arcs(r)) {
              const double s = line.signed_distance(arc.center);
              if (std::abs(s) > arc.radius) continue;
              const double h = std::sqrt((arc.radius - s) * (arc.radius + s));
              const Vec2 foot = arc.center - s * line.normal();
              for (const double sign : {-1.0, 1.0}) {
                const Vec2 pt = foot + sign * h * dir;
                const Vec2 rel = pt - arc.center;
                if (!arc_contains_angle(arc, std::atan2(rel.y, rel.x), 1e-12)) continue;
                const double t = dot(pt - q, dir);
                t_lo = std::min(t_lo, t);
                t_hi = std::max(t_hi, t);
              }
            }
            if (!(t_hi > t_lo)) return std::nullopt;
            Chord c{q + t_lo * dir, q + t_hi * dir, t_hi - t_lo, false};
            for (const Vec2 corner : r.corners) {
              if (norm(corner - c.a) <= kDegeneracyTol || norm(corner - c.b) <= kDegeneracyTol)
                c.touches_corner = true;
            }
            return c;
          },
      },
      shape_);
}

double ConvexDomain::chord_length(const LineCoords& line) const {
  if (const auto* d = std::get_if<Disk>(&shape_)) {
    const double s = line.signed_distance(d->center);
    if (std::abs(s) >= d->radius) return 0.0;
    return 2.0 * std::sqrt((d->radius - s) * (d->radius + s));
  }
  const auto c = chord(line);
  return c ? c->length : 0.0;
}

double ConvexDomain::chord_argmax(double theta) const {
  return std::visit(Overloaded{
                        [&](const Disk& d) { return dot(d.center, unit(theta)); },
                        [&](const ConvexPolygon& p) {
                          // Piecewise linear and concave: the maximum sits at a vertex projection.
                          double best_p = 0.0;
                          double best = -1.0;
                          for (const Vec2 v : p.vertices) {
                            const double off = dot(v, unit(theta));
                            const double len = chord_length({theta, off});
                            if (len > best) {
                              best = len;
                              best_p = off;
                            }
                          }
                          return best_p;
                        },
                        [&](const Reuleaux&) {
                          const Support s = support(theta);
                          return golden_section_max(
                                     [&](double p) { return chord_length({theta, p}); }, s.lo, s.hi, 1e-13)
                              .first;
                        },
                    },
                    shape_);
}

std::vector<double> ConvexDomain::chord_kinks(double theta) const {
  std::vector<double> kinks;
  const Vec2 n = unit(theta);
  if (const auto* p = std::get_if<ConvexPolygon>(&shape_)) {
    for (const Vec2 v : p->vertices) kinks.push_back(dot(v, n));
  } else if (const auto* r = std::get_if<Reuleaux>(&shape_)) {
    for (const Vec2 v : r->corners) kinks.push_back(dot(v, n));
  }
  std::sort(kinks.begin(), kinks.end());
  return kinks;
}

ChordProfile::ChordProfile(const ConvexDomain& domain, double theta) : domain_(&domain), theta_(theta) {
  if (const auto* d = std::get_if<Disk>(&domain.shape())) {
    kind_ = 1;
    center_offset_ = dot(d->center, unit(theta));
    radius_ = d->radius;
  } else if (std::holds_alternative<ConvexPolygon>(domain.shape())) {
    kind_ = 2;
    knots_ = domain.chord_kinks(theta);
    values_.reserve(knots_.size());
    for (const double k : knots_) values_.push_back(domain.chord_length({theta, k}));
  }
}

double ChordProfile::operator()(double offset) const {
  if (kind_ == 1) {
    const double s = offset - center_offset_;
    if (std::abs(s) >= radius_) return 0.0;
    return 2.0 * std::sqrt((radius_ - s) * (radius_ + s));
  }
  if (kind_ == 2) {
    if (offset <= knots_.front() || offset >= knots_.back()) return 0.0;
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), offset);
    const std::size_t i = static_cast<std::size_t>(it - knots_.begin());
    const double a = knots_[i - 1];
    const double b = knots_[i];
    if (!(b > a)) return values_[i];
    const double t = (offset - a) / (b - a);
    return (1.0 - t) * values_[i - 1] + t * values_[i];
  }
  return domain_->chord_length({theta_, offset});
}

bool ConvexDomain::contains(Vec2 p, double tol) const {
  return std::visit(Overloaded{
                        [&](const Disk& d) { return norm(p - d.center) <= d.radius + tol; },
                        [&](const ConvexPolygon& poly) {
                          const auto& v = poly.vertices;
                          for (std::size_t i = 0; i < v.size(); ++i) {
                            const Vec2 e = v[(i + 1) % v.size()] - v[i];
                            if (cross(e, p - v[i]) < -tol * norm(e)) return false;
                          }
                          return true;
                        },
                        [&](const Reuleaux& r) {
                          const double w = reuleaux_width(r);
                          for (const Vec2 c : r.corners) {
                            if (norm(p - c) > w + tol) return false;
                          }
                          return true;
                        },
                    },
                    shape_);
}

bool ConvexDomain::contains(const Primitive& prim, double tol) const {
  if (const auto* s = std::get_if<Segment>(&prim)) return contains(s->p0, tol) && contains(s->p1, tol);
  const Arc arc = as_arc(prim);
  return std::visit(Overloaded{
                        [&](const Disk& d) { return max_distance_on_arc(arc, d.center) <= d.radius + tol; },
                        [&](const ConvexPolygon& poly) {
                          const auto& v = poly.vertices;
                          for (std::size_t i = 0; i < v.size(); ++i) {
                            const Vec2 e = v[(i + 1) % v.size()] - v[i];
                            const Vec2 inward = (1.0 / norm(e)) * Vec2{-e.y, e.x};
                            if (min_projection_on_arc(arc, inward) - dot(v[i], inward) < -tol) return false;
                          }
                          return true;
                        },
                        [&](const Reuleaux& r) {
                          const double w = reuleaux_width(r);
                          for (const Vec2 c : r.corners) {
                            if (max_distance_on_arc(arc, c) > w + tol) return false;
                          }
                          return true;
                        },
                    },
                    shape_);
}

DomainMetrics domain_metrics(const ConvexDomain& domain) { return domain.metrics(); }

ConvexDomain apply_rigid_motion(const ConvexDomain& domain, const RigidMotion& motion) {
  return std::visit(Overloaded{
                        [&](const Disk& d) { return ConvexDomain::disk(d.radius, motion.apply(d.center)); },
                        [&](const ConvexPolygon& p) {
                          std::vector<Vec2> v;
                          v.reserve(p.vertices.size());
                          for (const Vec2 x : p.vertices) v.push_back(motion.apply(x));
                          return ConvexDomain::polygon(std::move(v));
                        },
                        [&](const Reuleaux& r) {
                          return ConvexDomain::reuleaux_from_corners(
                              {motion.apply(r.corners[0]), motion.apply(r.corners[1]), motion.apply(r.corners[2])});
                        },
                    },
                    domain.shape());
}

}  // namespace buffon
