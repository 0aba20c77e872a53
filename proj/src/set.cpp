#include "buffon/set.hpp"

#include <algorithm>

namespace buffon {

RectifiableSet::RectifiableSet(std::vector<Primitive> primitives) : primitives_(std::move(primitives)) {
  for (const Primitive& p : primitives_) validate(p);
  total_length_ = recompute_length(primitives_);
}

void RectifiableSet::add(Primitive prim) {
  validate(prim);
  total_length_ += length(prim);
  primitives_.push_back(std::move(prim));
}

void RectifiableSet::append(const RectifiableSet& other) {
  primitives_.insert(primitives_.end(), other.primitives_.begin(), other.primitives_.end());
  total_length_ = recompute_length(primitives_);
}

double set_length(const RectifiableSet& set) { return set.total_length(); }

double recompute_length(std::span<const Primitive> primitives) {
  double sum = 0.0;
  for (const Primitive& p : primitives) sum += length(p);
  return sum;
}

IntersectionResult count_intersections(const LineCoords& line, std::span<const Primitive> primitives,
                                       double tol) {
  IntersectionResult total;
  for (const Primitive& p : primitives) total += intersect_line_primitive(line, p, tol);
  return total;
}

IntersectionResult count_intersections(const LineCoords& line, const RectifiableSet& set, double tol) {
  return count_intersections(line, set.primitives(), tol);
}

RectifiableSet apply_rigid_motion(const RectifiableSet& set, const RigidMotion& motion) {
  std::vector<Primitive> moved;
  moved.reserve(set.size());
  for (const Primitive& p : set.primitives()) moved.push_back(apply_rigid_motion(p, motion));
  RectifiableSet out(std::move(moved));
  out.metadata() = set.metadata();
  return out;
}

bool contained_in(const RectifiableSet& set, const ConvexDomain& domain, double tol) {
  return std::all_of(set.primitives().begin(), set.primitives().end(),
                     [&](const Primitive& p) { return domain.contains(p, tol); });
}

}  // namespace buffon
