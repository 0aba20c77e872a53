#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "buffon/domain.hpp"
#include "buffon/set.hpp"

namespace buffon {

inline constexpr std::size_t kDefaultPrimitiveCap = 10'000'000;

/// n line families through the origin at angles pi*k/n, each with all its
/// translates by integer multiples of epsilon along the family normal.
struct SteinhausParams {
  int n = 1;
  double epsilon = 1.0;
};

void validate(const SteinhausParams& params);

/// Domain intersected with the Steinhaus family: one chord segment per
/// direction k and integer s with |s * epsilon| <= circumradius, empty chords
/// omitted. The domain is used in the pose given. Throws ResourceLimitError
/// when the candidate line count would exceed `cap`.
RectifiableSet steinhaus_clip(const SteinhausParams& params, const ConvexDomain& domain,
                              std::size_t cap = kDefaultPrimitiveCap);

struct SteinhausBuild {
  SteinhausParams params;
  RectifiableSet set;
};

// n = round(L^(1/3)), epsilon = 1 / round(L^(2/3)). The realized length is
// only proportional to L; it is not rescaled.
SteinhausParams steinhaus_params_for_length(double length);
SteinhausBuild steinhaus_for_length(double length, const ConvexDomain& domain,
                                    std::size_t cap = kDefaultPrimitiveCap);

/// Radii sqrt(1 - i^2 pi^4 / (4 L^2)) for integers 1 <= i < 2L/pi^2, strictly
/// decreasing. Origin-centered circles at these radii cross every line at
/// distance d from the origin 2 * floor((2L/pi^2) sqrt(1 - d^2)) times.
std::vector<double> disk_circle_radii(double length);

// 2*pi times the sum of the radii.
double circles_length(std::span<const double> radii);

/// Concentric circles in the unit disk with total length `length`: the
/// radii above followed by a length correction using innermost circles. The
/// correction is recorded under metadata["adjustment"].
RectifiableSet disk_construction(double length);

}  // namespace buffon
