#pragma once

#include <optional>
#include <string>

#include "buffon/domain.hpp"
#include "buffon/set.hpp"

namespace buffon {

struct SvgStyle {
  int size_px = 800;
  double stroke = 0.004;  // in domain units
  std::string set_color = "#1f3a93";
  std::string domain_color = "#000000";
  std::string witness_color = "#d62728";
};

// Deterministic SVG 1.1: domain outline, primitives, optional witness line.
std::string render_svg(const RectifiableSet& set, const ConvexDomain& domain,
                       const std::optional<LineCoords>& witness = std::nullopt, const SvgStyle& style = {});

}  // namespace buffon
