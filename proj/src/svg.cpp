#include "buffon/svg.hpp"

#include <cstdio>
#include <sstream>

namespace buffon {

namespace {

// SVG's y axis points down; every coordinate goes through here.
std::string xy(Vec2 p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f %.6f", p.x, -p.y);
  return buf;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void arc_path(std::ostringstream& out, Vec2 center, double r, double start, double span) {
  const Vec2 a = center + r * unit(start);
  const Vec2 b = center + r * unit(start + span);
  // Counterclockwise in the plane is clockwise on screen: sweep flag 0.
  out << "M " << xy(a) << " A " << num(r) << ' ' << num(r) << " 0 " << (span > kPi ? 1 : 0) << " 0 " << xy(b);
}

}  // namespace

std::string render_svg(const RectifiableSet& set, const ConvexDomain& domain, const std::optional<LineCoords>& witness,
                       const SvgStyle& style) {
  const auto sx = domain.support(0.0);
  const auto sy = domain.support(kPi / 2.0);
  const double margin = 0.05 * std::max(sx.hi - sx.lo, sy.hi - sy.lo);
  const double x0 = sx.lo - margin;
  const double y0 = sy.lo - margin;
  const double w = sx.hi - sx.lo + 2.0 * margin;
  const double h = sy.hi - sy.lo + 2.0 * margin;
  const int height_px = static_cast<int>(std::lround(style.size_px * h / w));

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.size_px << "\" height=\""
      << height_px << "\" viewBox=\"" << num(x0) << ' ' << num(-(y0 + h)) << ' ' << num(w) << ' ' << num(h)
      << "\">\n";
  out << "<g fill=\"none\" stroke-linecap=\"round\">\n";

  out << "<path stroke=\"" << style.domain_color << "\" stroke-width=\"" << num(1.5 * style.stroke) << "\" d=\"";
  if (const auto* d = std::get_if<Disk>(&domain.shape())) {
    arc_path(out, d->center, d->radius, 0.0, kPi);
    out << ' ';
    arc_path(out, d->center, d->radius, kPi, kPi);
  } else if (const auto* p = std::get_if<ConvexPolygon>(&domain.shape())) {
    for (std::size_t i = 0; i < p->vertices.size(); ++i) out << (i == 0 ? "M " : " L ") << xy(p->vertices[i]);
    out << " Z";
  } else {
    bool first = true;
    for (const Arc& a : reuleaux_arcs(std::get<Reuleaux>(domain.shape()))) {
      if (!first) out << ' ';
      arc_path(out, a.center, a.radius, a.angle_start, a.angle_span);
      first = false;
    }
  }
  out << "\"/>\n";

  std::ostringstream segs;
  std::ostringstream curves;
  for (const Primitive& prim : set.primitives()) {
    if (const auto* s = std::get_if<Segment>(&prim)) {
      segs << "M " << xy(s->p0) << " L " << xy(s->p1) << ' ';
    } else if (const auto* c = std::get_if<Circle>(&prim)) {
      curves << "<circle cx=\"" << num(c->center.x) << "\" cy=\"" << num(-c->center.y) << "\" r=\"" << num(c->radius)
             << "\"/>\n";
    } else {
      const auto& a = std::get<Arc>(prim);
      curves << "<path d=\"";
      arc_path(curves, a.center, a.radius, a.angle_start, a.angle_span);
      curves << "\"/>\n";
    }
  }
  out << "<g stroke=\"" << style.set_color << "\" stroke-width=\"" << num(style.stroke) << "\">\n";
  if (const std::string d = segs.str(); !d.empty()) {
    out << "<path d=\"" << d.substr(0, d.size() - 1) << "\"/>\n";
  }
  out << curves.str() << "</g>\n";

  if (witness) {
    const auto frame = ConvexDomain::polygon({{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + h}, {x0, y0 + h}});
    if (const auto c = frame.chord(*witness)) {
      out << "<path stroke=\"" << style.witness_color << "\" stroke-width=\"" << num(1.5 * style.stroke) << "\" d=\"M "
          << xy(c->a) << " L " << xy(c->b) << "\"/>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace buffon
