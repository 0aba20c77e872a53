#include <cmath>
#include <random>

#include "buffon/harmonic.hpp"
#include "doctest.h"

using namespace buffon;

TEST_CASE("direct sum examples") {
  CHECK(abs_sin_sum_direct(1, kPi / 2.0) == doctest::Approx(1.0));
  CHECK(abs_sin_sum_direct(6, 0.0) == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-14));
  const double deg = kPi / 180.0;
  CHECK(abs_sin_sum_direct(6, kPi / 12.0) ==
        doctest::Approx(2.0 * (std::sin(15 * deg) + std::sin(45 * deg) + std::sin(75 * deg))).epsilon(1e-14));
  CHECK(abs_sin_sum_direct(6, kPi / 12.0) == doctest::Approx(3.8637).epsilon(1e-4));
}

TEST_CASE("fourier series examples") {
  // At theta = 0 every cosine is 1, so the truncation error is the whole
  // tail, about 1/(pi n terms).
  const auto f = abs_sin_sum_fourier(6, 0.0, 10000);
  const double err = std::abs(f.value - (2.0 + std::sqrt(3.0)));
  CHECK(err <= f.tail_bound);
  CHECK(err == doctest::Approx(1.0 / (kPi * 6.0 * 10000.0)).epsilon(1e-3));
  CHECK(f.tail_bound == doctest::Approx(fourier_tail_bound(6, 10000)));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int n = 1; n <= 16; ++n) {
    for (int i = 0; i < 200; ++i) {
      const double t = angle(rng);
      const auto r = evaluate_sin_sum(n, t, 1000);
      CHECK(std::abs(r.direct_value - r.fourier_value) <= r.tail_bound + 1e-12);
      CHECK(r.direct_value >= 0.0);
      CHECK(r.direct_value <= n);
    }
  }
}

TEST_CASE("tail bound dominates the exact tail") {
  for (const int n : {1, 2, 7, 30}) {
    for (const int terms : {1, 10, 100}) {
      double tail = 0.0;
      for (int l = terms + 1; l < 2'000'000; ++l) tail += n / (4.0 * l * l * n * n - 1.0);
      CHECK(4.0 / kPi * tail <= fourier_tail_bound(n, terms));
    }
    CHECK(fourier_coefficient_sum(n) <= 1.0 / n);
  }
}

TEST_CASE("global deviation from the mean") {
  for (int n = 1; n <= 64; ++n) {
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      worst = std::max(worst, std::abs(abs_sin_sum_direct(n, kPi / n * i / 2000.0) - 2.0 * n / kPi));
    }
    CHECK(worst <= 4.0 / (kPi * n));
  }
}

TEST_CASE("periodicity and reflection") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int n = 1; n <= 20; ++n) {
    for (int i = 0; i < 50; ++i) {
      const double t = angle(rng);
      CHECK(std::abs(abs_sin_sum_direct(n, t) - abs_sin_sum_direct(n, t + kPi / n)) < 1e-12);
      CHECK(std::abs(abs_sin_sum_direct(n, t) - abs_sin_sum_direct(n, kPi / n - t)) < 1e-12);
    }
  }
}

TEST_CASE("longimeter extremes") {
  const auto e6 = longimeter_error_extremes(6);
  CHECK(100.0 * e6.max_rel_error == doctest::Approx(1.15).epsilon(0.02 / 1.15));
  CHECK(e6.min_rel_error == doctest::Approx((2.0 + std::sqrt(3.0)) * kPi / 12.0 - 1.0).epsilon(1e-12));
  CHECK(100.0 * e6.min_rel_error == doctest::Approx(-2.296).epsilon(1e-3));
  CHECK(std::abs(e6.argmin_theta) < 1e-6);
  CHECK(std::abs(e6.argmax_theta - kPi / 12.0) < 1e-6);

  for (const int n : {2, 3, 10, 40}) {
    const auto e = longimeter_error_extremes(n);
    CHECK(std::abs(e.argmin_theta) < 1e-6);
    CHECK(std::abs(e.argmax_theta - kPi / (2.0 * n)) < 1e-6);
    CHECK(std::abs(e.min_rel_error) <= 2.0 / (n * n));
    CHECK(std::abs(e.max_rel_error) <= 2.0 / (n * n));
    CHECK(longimeter_rel_error(n, e.argmax_theta) == doctest::Approx(e.max_rel_error));
  }
}

TEST_CASE("projection counts") {
  CHECK(projection_count({0, 0}, {0, 1}, 0, 3, 0.1) == doctest::Approx(10.0));
  CHECK(projection_count({0, 0}, {1, 0}, 0, 3, 0.1) == doctest::Approx(0.0));
  const Vec2 along = unit(kPi * 2 / 5);
  CHECK(std::abs(projection_count({0.3, 0.1}, Vec2{0.3, 0.1} + 0.7 * along, 2, 5, 0.05)) < 1e-12);
}
