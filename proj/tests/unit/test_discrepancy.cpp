#include <cmath>
#include <random>

#include "buffon/construct.hpp"
#include "buffon/discrepancy.hpp"
#include "buffon/verify.hpp"
#include "doctest.h"

using namespace buffon;

namespace {

// sup over a dense offset grid of |count - factor * chord| for one circle of
// radius r about the origin in the unit disk; rotation invariant, so one
// angle suffices.
double brute_force_single_circle(double r, int grid) {
  const double factor = 2.0 / kPi * (kTwoPi * r) / kPi;
  double best = 0.0;
  for (int i = 0; i <= grid; ++i) {
    const double p = static_cast<double>(i) / grid;
    if (std::abs(p - r) < 1e-12) continue;
    const double count = p < r ? 2.0 : 0.0;
    best = std::max(best, std::abs(count - factor * 2.0 * std::sqrt(std::max(0.0, 1.0 - p * p))));
  }
  return best;
}

ScanConfig quick_scan(int theta_count = 256) {
  ScanConfig c;
  c.theta_count = theta_count;
  c.threads = 1;
  return c;
}

}  // namespace

TEST_CASE("crofton factor") {
  CHECK(crofton_factor(500.0, ConvexDomain::disk()) == doctest::Approx(1000.0 / (kPi * kPi)));
  const auto sq = ConvexDomain::square(2.0);
  CHECK(crofton_factor(10.0, sq) == doctest::Approx(2.0 / kPi * 10.0 / 4.0));
}

TEST_CASE("deviation examples") {
  RectifiableSet circle;
  circle.add(Circle{{0, 0}, 0.5});
  const auto target = make_target(circle, ConvexDomain::disk());
  CHECK(target.factor == doctest::Approx(2.0 / kPi));
  CHECK(deviation({0.7, 0.0}, circle, target) == doctest::Approx(std::abs(2.0 - 4.0 / kPi)));
  CHECK(std::abs(2.0 - 4.0 / kPi) == doctest::Approx(0.7268).epsilon(1e-4));
  CHECK_THROWS_AS(deviation({0.7, 0.5}, circle, target), DegenerateLineError);

  const RectifiableSet empty;
  CHECK(deviation({0.0, 3.0}, empty, make_target(empty, ConvexDomain::disk())) == 0.0);

  // |160 - (1000/pi^2) * 1.769|
  CHECK(std::abs(160.0 - crofton_factor(500.0, ConvexDomain::disk()) * 1.769) == doctest::Approx(19.24).epsilon(1e-3));
}

TEST_CASE("scan of the empty set") {
  const auto rep = sup_discrepancy_scan(RectifiableSet{}, ConvexDomain::disk(), quick_scan());
  CHECK(rep.sup_value == 0.0);
  CHECK(rep.method == EvalMethod::breakpoint_scan);
  CHECK(std::isfinite(rep.certified_gap));
  CHECK_THROWS_AS(sup_discrepancy_scan(RectifiableSet{}, ConvexDomain::disk(), quick_scan(3)), std::invalid_argument);
}

TEST_CASE("scan of one circle matches the 1-D brute force") {
  for (const double r : {0.5, 0.2, 0.9}) {
    RectifiableSet set;
    set.add(Circle{{0, 0}, r});
    const auto rep = sup_discrepancy_scan(set, ConvexDomain::disk(), quick_scan(64));
    CHECK(std::abs(rep.sup_value - brute_force_single_circle(r, 20'000'000)) < 1e-6);
    // The witness reproduces the value and is not degenerate.
    CHECK(deviation(rep.witness, set, make_target(set, ConvexDomain::disk())) ==
          doctest::Approx(rep.sup_value).epsilon(1e-12));
  }
}

TEST_CASE("scan witness is a certificate") {
  const auto set = random_mixed_set(4, 20, 0.9);
  const auto dom = ConvexDomain::disk();
  const auto rep = sup_discrepancy_scan(set, dom, quick_scan());
  CHECK(deviation(rep.witness, set, make_target(set, dom)) == doctest::Approx(rep.sup_value).epsilon(1e-12));
  CHECK(rep.primitive_count == set.size());
  CHECK(rep.realized_length == doctest::Approx(set.total_length()));
}

TEST_CASE("factor override and multi-factor scans agree") {
  const auto set = disk_construction(200.0);
  const auto dom = ConvexDomain::disk();
  const double c = crofton_factor(set.total_length(), dom);
  const std::vector<double> factors{c, 0.9 * c, 0.0};
  const auto multi = sup_discrepancy_scan(set, dom, factors, quick_scan());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    ScanConfig one = quick_scan();
    one.factor_override = factors[i];
    const auto single = sup_discrepancy_scan(set, dom, one);
    CHECK(single.sup_value == multi[i].sup_value);
    CHECK(single.certified_gap == multi[i].certified_gap);
    CHECK(single.witness == multi[i].witness);
  }
  // With zero factor the sup is the largest crossing count: 2 per circle.
  CHECK(multi[2].sup_value == doctest::Approx(2.0 * set.size()));
}

TEST_CASE("Monte Carlo is seeded, lower than the certified bound") {
  const auto dom = ConvexDomain::disk();
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto set = random_mixed_set(100 + seed, 12, 0.95);
    McConfig mc;
    mc.samples = 2000;
    mc.seed = seed;
    mc.threads = 1;
    const auto a = sup_discrepancy_mc(set, dom, mc);
    const auto b = sup_discrepancy_mc(set, dom, mc);
    CHECK(a.sup_value == b.sup_value);
    CHECK(a.witness == b.witness);
    CHECK(a.method == EvalMethod::monte_carlo);
    CHECK(std::isinf(a.certified_gap));
    const auto scan = sup_discrepancy_scan(set, dom, quick_scan(512));
    CHECK(a.sup_value <= scan.sup_value + scan.certified_gap);
  }
}

TEST_CASE("Monte Carlo results do not depend on the worker count") {
  const auto set = disk_construction(100.0);
  McConfig mc;
  mc.samples = 5000;
  mc.seed = 3;
  mc.threads = 1;
  const auto one = sup_discrepancy_mc(set, ConvexDomain::disk(), mc);
  mc.threads = 3;
  const auto three = sup_discrepancy_mc(set, ConvexDomain::disk(), mc);
  CHECK(one.sup_value == three.sup_value);
  CHECK(one.witness == three.witness);
  CHECK(one.degenerate_lines_skipped == three.degenerate_lines_skipped);
}

TEST_CASE("sample_lines draws from [0, pi) x [-R, R]") {
  const auto dom = ConvexDomain::square(1.0);
  const auto lines = sample_lines(dom, 10000, 5);
  double mean_theta = 0.0;
  for (const auto& l : lines) {
    CHECK(l.theta >= 0.0);
    CHECK(l.theta < kPi);
    CHECK(std::abs(l.offset) <= dom.circumradius());
    mean_theta += l.theta / lines.size();
  }
  CHECK(mean_theta == doctest::Approx(kPi / 2.0).epsilon(0.02));
}

TEST_CASE("crofton integral examples") {
  const auto disk = ConvexDomain::disk();
  RectifiableSet seg;
  seg.add(Segment{{0.1, 0.2}, {0.1 + 0.01, 0.2}});
  CHECK(crofton_integrals(seg, disk, 1.0, 2048).count_integral == doctest::Approx(0.04).epsilon(1e-9));

  const auto empty = crofton_integrals(RectifiableSet{}, disk, 1.0, 2048);
  CHECK(empty.count_integral == 0.0);
  CHECK(empty.chord_integral == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-9));

  RectifiableSet circle;
  circle.add(Circle{{0, 0}, 1.0});
  CHECK(crofton_integrals(circle, disk, 1.0, 2048).count_integral == doctest::Approx(8.0 * kPi).epsilon(1e-9));

  const auto arcs = random_mixed_set(77, 20, 2.0);
  const auto res = crofton_integrals(arcs, disk, 2.0, 2048);
  CHECK(std::abs(res.count_integral / (4.0 * arcs.total_length()) - 1.0) < 1e-6);
}

TEST_CASE("proposition bound check") {
  const auto disk = ConvexDomain::disk();
  const auto zero = proposition_bound_check(RectifiableSet{}, disk, 0.0, 0.0);
  CHECK(zero.holds);
  CHECK(zero.margin == 0.0);
  CHECK_THROWS_AS(proposition_bound_check(RectifiableSet{}, disk, 0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(proposition_bound_check(RectifiableSet{}, disk, 0.0, NAN), std::invalid_argument);

  const auto set = disk_construction(500.0);
  ScanConfig raw = quick_scan();
  raw.factor_override = 0.0;
  const auto counts = sup_discrepancy_scan(set, disk, raw);
  CHECK(counts.sup_value >= 500.0 / (kPi * 2.0));
  const auto check = proposition_bound_check(set, disk, counts);
  CHECK(check.holds);
  CHECK(check.lhs == doctest::Approx(crofton_factor(500.0, disk)));

  // A Monte Carlo value is not an upper-bound certificate.
  McConfig mc;
  mc.samples = 100;
  CHECK_THROWS_AS(proposition_bound_check(set, disk, sup_discrepancy_mc(set, disk, mc)), std::invalid_argument);
}

TEST_CASE("rigid motions leave the sup within the certified gap") {
  const auto set = random_mixed_set(21, 10, 0.9);
  const auto dom = ConvexDomain::disk();
  const RigidMotion g{0.77, {0.3, -0.2}};
  const auto a = sup_discrepancy_scan(set, dom, quick_scan());
  const auto b = sup_discrepancy_scan(apply_rigid_motion(set, g), apply_rigid_motion(dom, g), quick_scan());
  CHECK(std::abs(a.sup_value - b.sup_value) <= std::max(a.certified_gap, b.certified_gap) + 1e-9);
}

TEST_CASE("disk construction reaches the half-integer lower bound") {
  const auto rep = sup_discrepancy_scan(disk_construction(50.0), ConvexDomain::disk(), quick_scan(512));
  CHECK(rep.sup_value >= 0.5 - 1e-6);
  CHECK(rep.sup_value <= 100.0);
}

TEST_CASE("scaling study fits only with three or more rows") {
  const auto dom = ConvexDomain::disk();
  const std::vector<double> one{50.0};
  const auto single = scaling_study(dom, one, quick_scan(64));
  CHECK(single.rows.size() == 1);
  CHECK_FALSE(single.fit.has_value());

  const std::vector<double> three{30.0, 100.0, 300.0};
  const auto study = scaling_study(dom, three, quick_scan(64));
  REQUIRE(study.fit.has_value());
  CHECK(study.rows[1].n == 5);
  CHECK(study.fit->residuals.size() == 3);
}

TEST_CASE("log-log fit") {
  const std::vector<double> x{1.0, 10.0, 100.0, 1000.0};
  std::vector<double> y;
  for (const double v : x) y.push_back(3.0 * std::pow(v, 0.4));
  const auto fit = fit_log_log(x, y);
  CHECK(fit.slope == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-12));
  for (const double r : fit.residuals) CHECK(std::abs(r) < 1e-12);
}
