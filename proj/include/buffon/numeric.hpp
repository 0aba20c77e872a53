#pragma once

#include <cmath>
#include <utility>

namespace buffon {

// Golden-section search for the maximizer of a unimodal function on [a, b].
template <class F>
std::pair<double, double> golden_section_max(F&& f, double a, double b, double tol = 1e-12,
                                             int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double x = 0.5 * (a + b);
  const double fx = f(x);
  if (f1 > fx && f1 >= f2) return {x1, f1};
  if (f2 > fx) return {x2, f2};
  return {x, fx};
}

}  // namespace buffon
