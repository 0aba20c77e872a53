#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "buffon/set.hpp"
#include "json.hpp"

namespace buffon {

struct Check {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool passed = false;
  std::string note;
};

struct SuiteResult {
  std::string suite;
  bool passed = true;
  std::vector<Check> checks;

  void add(Check c) {
    passed = passed && c.passed;
    checks.push_back(std::move(c));
  }
};

struct VerifyOptions {
  int resolution = 2048;     // crofton: theta cells
  int random_sets = 50;      // crofton: random sets tested
  std::vector<double> lengths{100.0, 500.0, 1000.0};  // theorem1, proposition
  int n = 6;                 // longimeter
  int theta_count = 4096;    // scans
  int r_grid = 100000;       // theorem1 counting grid
  int theta_draws = 10000;   // harmonic: random angles per n
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

// Up to `max_primitives` random segments, circles and arcs inside B(0, radius).
RectifiableSet random_mixed_set(std::uint64_t seed, std::size_t max_primitives, double radius);

SuiteResult verify_crofton(const VerifyOptions& opts);
SuiteResult verify_proposition(const VerifyOptions& opts);
SuiteResult verify_harmonic(const VerifyOptions& opts);
SuiteResult verify_theorem1(const VerifyOptions& opts);
SuiteResult verify_longimeter(const VerifyOptions& opts);

// Dispatches on crofton|proposition|harmonic|theorem1|longimeter.
SuiteResult run_suite(std::string_view name, const VerifyOptions& opts);

nlohmann::json suite_to_json(const SuiteResult& result);

}  // namespace buffon
