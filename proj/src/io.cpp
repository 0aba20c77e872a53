#include "buffon/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <vector>

namespace buffon {

namespace {

using nlohmann::json;

json point(Vec2 p) { return json::array({p.x, p.y}); }

Vec2 read_point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a point [x, y]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(std::string_view s) {
  const std::string text(s);
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw std::invalid_argument("domain spec: bad number '" + text + "'");
  }
  return v;
}

std::vector<double> parse_numbers(std::string_view s) {
  std::vector<double> out;
  for (const auto part : split(s, ',')) out.push_back(parse_number(part));
  return out;
}

Vec2 parse_pair(std::string_view s) {
  const auto v = parse_numbers(s);
  if (v.size() != 2) throw std::invalid_argument("domain spec: expected x,y");
  return {v[0], v[1]};
}

double gap_from_json(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

}  // namespace

json primitive_to_json(const Primitive& prim) {
  if (const auto* s = std::get_if<Segment>(&prim)) return {{"type", "segment"}, {"p0", point(s->p0)}, {"p1", point(s->p1)}};
  if (const auto* c = std::get_if<Circle>(&prim)) return {{"type", "circle"}, {"center", point(c->center)}, {"radius", c->radius}};
  const auto& a = std::get<Arc>(prim);
  return {{"type", "arc"},
          {"center", point(a.center)},
          {"radius", a.radius},
          {"angle_start", a.angle_start},
          {"angle_span", a.angle_span}};
}

Primitive primitive_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "segment") return make_segment(read_point(j.at("p0")), read_point(j.at("p1")));
  if (type == "circle") return make_circle(read_point(j.at("center")), j.at("radius").get<double>());
  if (type == "arc") {
    const Vec2 c = read_point(j.at("center"));
    const double r = j.at("radius").get<double>();
    const double start = j.at("angle_start").get<double>();
    const double span = j.at("angle_span").get<double>();
    if (std::abs(span - kTwoPi) <= 1e-12) return make_circle(c, r);
    Primitive p = Arc{c, r, start, span};
    validate(p);
    return p;
  }
  throw std::invalid_argument("unknown primitive type '" + type + "'");
}

json set_to_json(const RectifiableSet& set) {
  json prims = json::array();
  for (const Primitive& p : set.primitives()) prims.push_back(primitive_to_json(p));
  return {{"primitives", std::move(prims)}, {"total_length", set.total_length()}, {"metadata", set.metadata()}};
}

RectifiableSet set_from_json(const json& j) {
  try {
    std::vector<Primitive> prims;
    for (const json& p : j.at("primitives")) prims.push_back(primitive_from_json(p));
    RectifiableSet set(std::move(prims));
    if (j.contains("total_length")) {
      const double stated = j.at("total_length").get<double>();
      if (std::abs(stated - set.total_length()) > 1e-9 * std::max(1.0, set.total_length())) {
        throw std::invalid_argument("set: total_length does not match its primitives");
      }
    }
    if (j.contains("metadata")) set.metadata() = j.at("metadata");
    return set;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("set: malformed document: ") + e.what());
  }
}

json line_to_json(const LineCoords& line) { return {{"theta", line.theta}, {"offset", line.offset}}; }

LineCoords line_from_json(const json& j) {
  return normalize_line(j.at("theta").get<double>(), j.at("offset").get<double>());
}

json report_to_json(const DiscrepancyReport& r, const json& config) {
  json gap = std::isfinite(r.certified_gap) ? json(r.certified_gap) : json(nullptr);
  return {{"version", kVersion},
          {"sup_value", r.sup_value},
          {"witness", line_to_json(r.witness)},
          {"method", to_string(r.method)},
          {"theta_samples", r.theta_samples},
          {"mc_samples", r.mc_samples},
          {"certified_gap", gap},
          {"degenerate_lines_skipped", r.degenerate_lines_skipped},
          {"factor", r.factor},
          {"realized_length", r.realized_length},
          {"primitive_count", r.primitive_count},
          {"seed", r.seed},
          {"gap_model", r.gap_model},
          {"config", config}};
}

DiscrepancyReport report_from_json(const json& j) {
  DiscrepancyReport r;
  r.sup_value = j.at("sup_value").get<double>();
  r.witness = line_from_json(j.at("witness"));
  const std::string method = j.at("method").get<std::string>();
  if (method == "breakpoint_scan") {
    r.method = EvalMethod::breakpoint_scan;
  } else if (method == "monte_carlo") {
    r.method = EvalMethod::monte_carlo;
  } else {
    throw std::invalid_argument("report: unknown method '" + method + "'");
  }
  r.theta_samples = j.at("theta_samples").get<int>();
  r.mc_samples = j.at("mc_samples").get<std::size_t>();
  r.certified_gap = gap_from_json(j.at("certified_gap"));
  r.degenerate_lines_skipped = j.at("degenerate_lines_skipped").get<std::size_t>();
  r.factor = j.at("factor").get<double>();
  r.realized_length = j.at("realized_length").get<double>();
  r.primitive_count = j.at("primitive_count").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.gap_model = j.value("gap_model", "");
  return r;
}

ConvexDomain parse_domain_spec(std::string_view spec) {
  const auto parts = split(spec, ':');
  const std::string_view kind = parts[0];
  auto arg = [&](std::size_t i) -> std::string_view { return i < parts.size() ? parts[i] : std::string_view{}; };
  if (kind == "disk") {
    if (parts.size() > 3) throw std::invalid_argument("domain spec: disk[:r[:cx,cy]]");
    const double r = parts.size() > 1 ? parse_number(arg(1)) : 1.0;
    const Vec2 c = parts.size() > 2 ? parse_pair(arg(2)) : Vec2{};
    return ConvexDomain::disk(r, c);
  }
  if (kind == "square") {
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("domain spec: square:side[:x0,y0]");
    return ConvexDomain::square(parse_number(arg(1)), parts.size() > 2 ? parse_pair(arg(2)) : Vec2{});
  }
  if (kind == "polygon") {
    if (parts.size() != 2) throw std::invalid_argument("domain spec: polygon:x1,y1;x2,y2;...");
    std::vector<Vec2> verts;
    for (const auto v : split(arg(1), ';')) verts.push_back(parse_pair(v));
    return ConvexDomain::polygon(std::move(verts));
  }
  if (kind == "reuleaux") {
    if (parts.size() < 2 || parts.size() > 3) throw std::invalid_argument("domain spec: reuleaux:width[:cx,cy[,rot]]");
    Vec2 c{};
    double rot = 0.0;
    if (parts.size() > 2) {
      const auto v = parse_numbers(arg(2));
      if (v.size() != 2 && v.size() != 3) throw std::invalid_argument("domain spec: reuleaux pose is cx,cy[,rot]");
      c = {v[0], v[1]};
      if (v.size() == 3) rot = v[2];
    }
    return ConvexDomain::reuleaux(parse_number(arg(1)), c, rot);
  }
  throw std::invalid_argument("domain spec: unknown kind '" + std::string(kind) + "'");
}

json domain_to_json(const ConvexDomain& domain) {
  json j;
  if (const auto* d = std::get_if<Disk>(&domain.shape())) {
    j = {{"type", "disk"}, {"center", point(d->center)}, {"radius", d->radius}};
  } else if (const auto* p = std::get_if<ConvexPolygon>(&domain.shape())) {
    json verts = json::array();
    for (const Vec2 v : p->vertices) verts.push_back(point(v));
    j = {{"type", "polygon"}, {"vertices", verts}};
  } else {
    const auto& r = std::get<Reuleaux>(domain.shape());
    j = {{"type", "reuleaux"}, {"corners", {point(r.corners[0]), point(r.corners[1]), point(r.corners[2])}}};
  }
  j["area"] = domain.area();
  j["diameter"] = domain.diameter();
  j["circumradius"] = domain.circumradius();
  return j;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j, int indent) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(indent) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace buffon
