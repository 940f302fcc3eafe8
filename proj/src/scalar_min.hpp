#pragma once

#include <limits>

namespace lipkin::detail {

// Golden-section search on [a, b]; assumes a single minimum in the bracket.
template <class F>
double golden_minimize(F&& f, double a, double b, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

// Coarse scan to localize the minimum, then golden-section refinement.
template <class F>
double grid_then_golden(F&& f, double a, double b, int grid, double tol) {
  int best = 0;
  double fbest = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid; ++i) {
    const double x = a + (b - a) * i / grid;
    const double fx = f(x);
    if (fx < fbest) {
      fbest = fx;
      best = i;
    }
  }
  const double lo = a + (b - a) * (best > 0 ? best - 1 : 0) / grid;
  const double hi = a + (b - a) * (best < grid ? best + 1 : grid) / grid;
  return golden_minimize(f, lo, hi, tol);
}

}  // namespace lipkin::detail
