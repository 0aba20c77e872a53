#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "buffon/domain.hpp"
#include "buffon/set.hpp"

namespace buffon {

/// The Crofton-scaled proportionality factor (2/pi) * L / area(domain),
/// with L the realized length of the set.
struct DeviationTarget {
  double factor = 0.0;
  double realized_length = 0.0;
  ConvexDomain domain;
};

DeviationTarget make_target(const RectifiableSet& set, const ConvexDomain& domain);
double crofton_factor(double length, const ConvexDomain& domain);

/// |#(line ∩ set) - factor * chord_length(line)|. Throws DegenerateLineError
/// if the line is tangent to, collinear with or passes through an endpoint of
/// some primitive.
double deviation(const LineCoords& line, const RectifiableSet& set, const DeviationTarget& target);

enum class EvalMethod { breakpoint_scan, monte_carlo };

const char* to_string(EvalMethod method);

/// Result of a supremum evaluation. `sup_value` is attained at `witness`, so it
/// is a lower bound on the discrepancy; `sup_value + certified_gap` is the
/// upper bound described by `gap_model` (infinite for Monte Carlo).
struct DiscrepancyReport {
  double sup_value = 0.0;
  LineCoords witness;
  EvalMethod method = EvalMethod::breakpoint_scan;
  int theta_samples = 0;
  std::size_t mc_samples = 0;
  double certified_gap = 0.0;
  std::size_t degenerate_lines_skipped = 0;

  double factor = 0.0;
  double realized_length = 0.0;
  std::size_t primitive_count = 0;
  std::uint64_t seed = 0;
  std::string gap_model;
};

struct ScanConfig {
  int theta_count = 4096;
  // Replaces the Crofton factor, e.g. to measure sup |count - c * chord|.
  std::optional<double> factor_override;
  // When false the upper-bound sweep is skipped and certified_gap is +inf.
  bool certify = true;
  unsigned threads = 0;
  std::size_t piece_cap = 10'000'000;
};

/// Deterministic supremum over lines. For each of `theta_count` uniformly
/// spaced angles the count is piecewise constant in the offset; every open
/// interval between breakpoints narrower than 4*kDegeneracyTol is skipped and
/// the others are maximized exactly via the quasi-concavity of the chord.
DiscrepancyReport sup_discrepancy_scan(const RectifiableSet& set, const ConvexDomain& domain,
                                       const ScanConfig& config = {});
// One sweep shared by several factors; reports come back in factor order and
// ignore config.factor_override.
std::vector<DiscrepancyReport> sup_discrepancy_scan(const RectifiableSet& set, const ConvexDomain& domain,
                                                    std::span<const double> factors, const ScanConfig& config = {});

struct McConfig {
  std::size_t samples = 100'000;
  std::uint64_t seed = 1;
  std::optional<double> factor_override;
  unsigned threads = 0;
};

// Lines drawn uniformly from [0, pi) x [-R, R], R the domain circumradius.
// Degenerate draws are skipped and counted.
DiscrepancyReport sup_discrepancy_mc(const RectifiableSet& set, const ConvexDomain& domain,
                                     const McConfig& config = {});

// Draws lines exactly as sup_discrepancy_mc does.
std::vector<LineCoords> sample_lines(const ConvexDomain& domain, std::size_t samples, std::uint64_t seed);

/// Integrals over the double cover theta in [0, 2 pi), offset in [-R, R].
/// Expected values are 4 * total_length and 2 pi * area.
struct CroftonIntegrals {
  double count_integral = 0.0;
  double chord_integral = 0.0;
  double radius = 0.0;
  int resolution = 0;
};

// Requires domain and set inside the ball B(0, radius).
CroftonIntegrals crofton_integrals(const RectifiableSet& set, const ConvexDomain& domain, double radius,
                                   int resolution = 2048);

struct PropositionCheck {
  bool holds = false;
  double lhs = 0.0;     // |c - (2/pi) L / area|
  double rhs = 0.0;     // (2 diam / area) X
  double margin = 0.0;  // rhs - lhs
};

// X must bound sup |count - c * chord| over lines.
PropositionCheck proposition_bound_check(const RectifiableSet& set, const ConvexDomain& domain, double c, double x);
// Takes c and X from a scan report measured on this set.
PropositionCheck proposition_bound_check(const RectifiableSet& set, const ConvexDomain& domain,
                                         const DiscrepancyReport& certificate);

struct ScalingRow {
  double length = 0.0;
  int n = 0;
  double epsilon = 0.0;
  double realized_length = 0.0;
  std::size_t primitives = 0;
  double sup_value = 0.0;
  double certified_gap = 0.0;
  LineCoords witness;
};

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> residuals;
};

struct ScalingStudy {
  std::vector<ScalingRow> rows;
  std::optional<ScalingFit> fit;  // present with three or more rows
};

// Least-squares fit of log(y) against log(x).
ScalingFit fit_log_log(std::span<const double> x, std::span<const double> y);

/// Steinhaus sets for each requested length, their scanned supremum, and the
/// log-log slope of sup against L.
ScalingStudy scaling_study(const ConvexDomain& domain, std::span<const double> lengths,
                           const ScanConfig& config = {});

}  // namespace buffon
