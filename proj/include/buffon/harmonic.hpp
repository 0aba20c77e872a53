#pragma once

#include "buffon/geom.hpp"

namespace buffon {

/// sum_{k=0}^{n-1} |sin(pi k / n + theta)|
double abs_sin_sum_direct(int n, double theta);

struct FourierSum {
  double value = 0.0;
  double tail_bound = 0.0;  // bounds |exact - value|
};

// 2n/pi - (4/pi) sum_{l=1}^{terms} n/(4 l^2 n^2 - 1) cos(2 l n theta). Only
// harmonics that are multiples of n survive the sum over k.
FourierSum abs_sin_sum_fourier(int n, double theta, int terms = 1000);

// (4/pi) * an upper bound for sum_{l > terms} n/(4 l^2 n^2 - 1), namely
// 1 / (pi n (terms + 1/2)).
double fourier_tail_bound(int n, int terms);

// sum_{l >= 1} n/(4 l^2 n^2 - 1) by partial sum plus the same tail estimate;
// never exceeds 1/n.
double fourier_coefficient_sum(int n, int terms = 100000);

struct SinSumResult {
  int n = 1;
  double theta = 0.0;
  double direct_value = 0.0;
  double fourier_value = 0.0;
  double tail_bound = 0.0;
};

SinSumResult evaluate_sin_sum(int n, double theta, int terms = 1000);

/// Relative error pi/(2n) * sum|sin| - 1 over theta in [0, pi/n]: the bias of
/// a longimeter with n directions on a segment at angle theta.
struct LongimeterExtremes {
  double min_rel_error = 0.0;
  double max_rel_error = 0.0;
  double argmin_theta = 0.0;
  double argmax_theta = 0.0;
};

double longimeter_rel_error(int n, double theta);
// Dense grid (10^4 nodes) refined by golden-section search.
LongimeterExtremes longimeter_error_extremes(int n, int grid = 10000);

/// Leading term |<nu_k, y - x>| / epsilon of the number of translates of
/// direction k crossed by the segment from x to y, with
/// nu_k = (-sin(pi k/n), cos(pi k/n)). The true count differs by less than 1.
double projection_count(Vec2 x, Vec2 y, int k, int n, double epsilon);

}  // namespace buffon
