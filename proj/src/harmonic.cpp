#include "buffon/harmonic.hpp"

#include <stdexcept>

#include "buffon/numeric.hpp"

namespace buffon {

namespace {

void require_n(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

}  // namespace

double abs_sin_sum_direct(int n, double theta) {
  require_n(n);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) sum += std::abs(std::sin(kPi * k / n + theta));
  return sum;
}

double fourier_tail_bound(int n, int terms) {
  require_n(n);
  if (terms < 0) throw std::invalid_argument("terms must be non-negative");
  return 1.0 / (kPi * n * (terms + 0.5));
}

FourierSum abs_sin_sum_fourier(int n, double theta, int terms) {
  require_n(n);
  if (terms < 1) throw std::invalid_argument("terms must be at least 1");
  const double nd = n;
  // cos(2 l n theta) by the Chebyshev recurrence.
  const double c1 = std::cos(2.0 * nd * theta);
  double prev = 1.0;
  double cur = c1;
  double series = 0.0;
  for (int l = 1; l <= terms; ++l) {
    const double ld = l;
    series += nd / (4.0 * ld * ld * nd * nd - 1.0) * cur;
    const double next = 2.0 * c1 * cur - prev;
    prev = cur;
    cur = next;
  }
  return {2.0 * nd / kPi - 4.0 / kPi * series, fourier_tail_bound(n, terms)};
}

double fourier_coefficient_sum(int n, int terms) {
  require_n(n);
  const double nd = n;
  double sum = 0.0;
  for (int l = terms; l >= 1; --l) {
    const double ld = l;
    sum += nd / (4.0 * ld * ld * nd * nd - 1.0);
  }
  return sum + kPi / 4.0 * fourier_tail_bound(n, terms);
}

SinSumResult evaluate_sin_sum(int n, double theta, int terms) {
  const FourierSum f = abs_sin_sum_fourier(n, theta, terms);
  return {n, theta, abs_sin_sum_direct(n, theta), f.value, f.tail_bound};
}

double longimeter_rel_error(int n, double theta) { return abs_sin_sum_direct(n, theta) * kPi / (2.0 * n) - 1.0; }

LongimeterExtremes longimeter_error_extremes(int n, int grid) {
  require_n(n);
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 nodes");
  const double period = kPi / n;
  const double h = period / grid;
  int imin = 0;
  int imax = 0;
  double vmin = longimeter_rel_error(n, 0.0);
  double vmax = vmin;
  for (int i = 1; i <= grid; ++i) {
    const double v = longimeter_rel_error(n, h * i);
    if (v < vmin) {
      vmin = v;
      imin = i;
    }
    if (v > vmax) {
      vmax = v;
      imax = i;
    }
  }
  auto bracket = [&](int i) {
    return std::pair{std::max(0.0, h * (i - 1)), std::min(period, h * (i + 1))};
  };
  LongimeterExtremes out;
  {
    const auto [a, b] = bracket(imax);
    const auto [x, fx] = golden_section_max([&](double t) { return longimeter_rel_error(n, t); }, a, b, 1e-13);
    out.argmax_theta = x;
    out.max_rel_error = std::max(fx, vmax);
  }
  {
    const auto [a, b] = bracket(imin);
    const auto [x, fx] = golden_section_max([&](double t) { return -longimeter_rel_error(n, t); }, a, b, 1e-13);
    out.argmin_theta = x;
    out.min_rel_error = std::min(-fx, vmin);
  }
  // theta and theta + pi/n give the same sum; report the representative nearer 0.
  if (period - out.argmin_theta < 1e-9) out.argmin_theta = 0.0;
  if (period - out.argmax_theta < 1e-9) out.argmax_theta = 0.0;
  return out;
}

double projection_count(Vec2 x, Vec2 y, int k, int n, double epsilon) {
  require_n(n);
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double angle = kPi * k / n;
  const Vec2 normal{-std::sin(angle), std::cos(angle)};
  return std::abs(dot(normal, y - x)) / epsilon;
}

}  // namespace buffon
