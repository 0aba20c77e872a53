#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "buffon/discrepancy.hpp"
#include "buffon/domain.hpp"
#include "buffon/set.hpp"

namespace buffon {

struct McObjective {
  std::size_t samples = 4096;
};
struct ScanObjective {
  int theta_count = 256;
};
using SearchEvaluator = std::variant<McObjective, ScanObjective>;

struct Greedy {};
struct Annealing {
  double initial_temperature = 1.0;
  double cooling = 0.999;  // temperature multiplier per iteration
};
using SearchSchedule = std::variant<Greedy, Annealing>;

struct SearchConfig {
  std::size_t segment_count = 100;
  double length_budget = 10.0;
  std::size_t iterations = 1000;
  double proposal_scale = 0.05;
  std::uint64_t seed = 1;
  SearchEvaluator evaluator = McObjective{};
  SearchSchedule schedule = Greedy{};
  int final_theta_count = 4096;
  unsigned threads = 0;
};

void validate(const SearchConfig& config);

struct SearchStep {
  std::size_t iteration = 0;
  double objective = 0.0;  // objective of the current state after the decision
  bool accepted = false;
};

struct SearchResult {
  RectifiableSet set;  // best state seen
  DiscrepancyReport report;  // scan of `set` at final_theta_count
  double initial_objective = 0.0;
  double best_objective = 0.0;
  std::vector<SearchStep> history;
};

// Called after every iteration with the current segments.
using SearchObserver = std::function<void(std::size_t iteration, std::span<const Segment> segments)>;

/// Local search over sets of `segment_count` segments inside the domain with
/// total length exactly `length_budget`. Each proposal jitters both endpoints
/// of one segment and clips it to the domain; a second segment absorbs the
/// length change. The objective is the configured evaluator's supremum. Monte
/// Carlo objectives reuse one fixed line sample for the whole run.
SearchResult optimize(const ConvexDomain& domain, const SearchConfig& config, const SearchObserver& observer = {});

// Random segments of equal length inside the domain, total `length`.
RectifiableSet random_segment_set(const ConvexDomain& domain, std::size_t count, double length, std::uint64_t seed);

}  // namespace buffon
