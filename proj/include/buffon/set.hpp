#pragma once

#include <span>
#include <vector>

#include "buffon/domain.hpp"
#include "buffon/geom.hpp"
#include "json.hpp"

namespace buffon {

/// A finite union of primitives with its cached total length.
class RectifiableSet {
 public:
  RectifiableSet() = default;
  explicit RectifiableSet(std::vector<Primitive> primitives);

  void add(Primitive prim);
  void append(const RectifiableSet& other);
  void reserve(std::size_t n) { primitives_.reserve(n); }

  std::span<const Primitive> primitives() const { return primitives_; }
  std::size_t size() const { return primitives_.size(); }
  bool empty() const { return primitives_.empty(); }
  double total_length() const { return total_length_; }

  nlohmann::json& metadata() { return metadata_; }
  const nlohmann::json& metadata() const { return metadata_; }

 private:
  std::vector<Primitive> primitives_;
  double total_length_ = 0.0;
  nlohmann::json metadata_ = nlohmann::json::object();
};

double set_length(const RectifiableSet& set);
// Sum of primitive lengths, ignoring the cache.
double recompute_length(std::span<const Primitive> primitives);

IntersectionResult count_intersections(const LineCoords& line, std::span<const Primitive> primitives,
                                       double tol = kDegeneracyTol);
IntersectionResult count_intersections(const LineCoords& line, const RectifiableSet& set,
                                       double tol = kDegeneracyTol);

RectifiableSet apply_rigid_motion(const RectifiableSet& set, const RigidMotion& motion);

bool contained_in(const RectifiableSet& set, const ConvexDomain& domain, double tol = kDegeneracyTol);

}  // namespace buffon
