#include "buffon/construct.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace buffon {

namespace {

// Correction circles stay well inside the unit disk so no tangent family
// accumulates on the boundary.
constexpr double kMaxCorrectionRadius = 0.95;

}  // namespace

void validate(const SteinhausParams& params) {
  if (params.n < 1) throw std::invalid_argument("steinhaus: n must be at least 1");
  if (!(params.epsilon > 0.0) || !std::isfinite(params.epsilon)) {
    throw std::invalid_argument("steinhaus: epsilon must be positive and finite");
  }
}

RectifiableSet steinhaus_clip(const SteinhausParams& params, const ConvexDomain& domain, std::size_t cap) {
  validate(params);
  const double radius = domain.circumradius();
  const double ratio = radius / params.epsilon;
  if (!(ratio < 1e15)) throw ResourceLimitError("steinhaus: epsilon too small for the domain");
  const auto s_max = static_cast<long long>(std::floor(ratio));
  const double candidates = static_cast<double>(params.n) * static_cast<double>(2 * s_max + 1);
  if (candidates > static_cast<double>(cap)) {
    throw ResourceLimitError("steinhaus: " + std::to_string(static_cast<long long>(candidates)) +
                             " candidate lines exceed the cap of " + std::to_string(cap));
  }

  RectifiableSet set;
  set.reserve(static_cast<std::size_t>(candidates));
  for (int k = 0; k < params.n; ++k) {
    // The family runs along (cos(pi k/n), sin(pi k/n)); its normal is a
    // quarter turn further.
    const double normal_angle = kPi * k / params.n + kPi / 2.0;
    for (long long s = -s_max; s <= s_max; ++s) {
      const LineCoords line = normalize_line(normal_angle, static_cast<double>(s) * params.epsilon);
      const auto chord = domain.chord(line);
      if (!chord || chord->length <= kDegeneracyTol) continue;
      set.add(Segment{chord->a, chord->b});
    }
  }
  set.metadata() = {{"construction", "steinhaus"}, {"n", params.n}, {"epsilon", params.epsilon}};
  return set;
}

SteinhausParams steinhaus_params_for_length(double length) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("steinhaus_for_length: length must be positive");
  }
  const double n = std::round(std::cbrt(length));
  const double inv_eps = std::round(std::cbrt(length * length));
  if (n < 1.0 || inv_eps < 1.0) throw std::invalid_argument("steinhaus_for_length: length too small for n >= 1");
  return {static_cast<int>(n), 1.0 / inv_eps};
}

SteinhausBuild steinhaus_for_length(double length, const ConvexDomain& domain, std::size_t cap) {
  const SteinhausParams params = steinhaus_params_for_length(length);
  SteinhausBuild build{params, steinhaus_clip(params, domain, cap)};
  build.set.metadata()["requested_length"] = length;
  build.set.metadata()["realized_length"] = build.set.total_length();
  return build;
}

std::vector<double> disk_circle_radii(double length) {
  if (!(length > 0.0) || !std::isfinite(length)) throw std::invalid_argument("disk_circle_radii: length must be positive");
  const double scale = 2.0 * length / (kPi * kPi);
  std::vector<double> radii;
  for (long long i = 1; static_cast<double>(i) < scale; ++i) {
    const double u = static_cast<double>(i) / scale;
    radii.push_back(std::sqrt((1.0 - u) * (1.0 + u)));
  }
  return radii;
}

double circles_length(std::span<const double> radii) {
  double sum = 0.0;
  for (const double r : radii) sum += r;
  return kTwoPi * sum;
}

RectifiableSet disk_construction(double length) {
  std::vector<double> radii = disk_circle_radii(length);
  const double base_length = circles_length(radii);
  const std::size_t base_count = radii.size();

  double deficit = length - base_length;
  std::size_t removed = 0;
  while (deficit < 0.0 && !radii.empty()) {
    deficit += kTwoPi * radii.back();
    radii.pop_back();
    ++removed;
  }

  std::vector<double> added;
  if (deficit > 1e-12 * length) {
    const double total_radius = deficit / kTwoPi;
    const auto k = static_cast<std::size_t>(std::ceil(total_radius / kMaxCorrectionRadius));
    added.assign(k, total_radius / static_cast<double>(k));
  }

  RectifiableSet set;
  set.reserve(radii.size() + added.size());
  for (const double r : radii) set.add(Circle{{0.0, 0.0}, r});
  for (const double r : added) set.add(Circle{{0.0, 0.0}, r});

  set.metadata() = {
      {"construction", "disk-circles"},
      {"requested_length", length},
      {"base_circles", base_count},
      {"pre_adjust_length", base_length},
      {"adjustment", {{"removed_innermost", removed}, {"added_radii", added}}},
  };
  return set;
}

}  // namespace buffon
