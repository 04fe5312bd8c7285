#pragma once

#include <cmath>
#include <stdexcept>

namespace rks {

/// Composite-rule settings for all whole-line / restricted L2 integrals.
struct QuadratureSpec {
  double step = 0.01;       // panel half-width of the composite Simpson rule
  double window_pad = 10.0; // window extension beyond the coefficient support

  void validate() const {
    if (!(step > 0.0)) throw std::invalid_argument("quadrature step must be > 0");
    if (!(window_pad > 0.0)) throw std::invalid_argument("quadrature window_pad must be > 0");
  }
};

// Snap outward to the lattice of multiples of `unit`. Window endpoints sit on
// multiples of 2*step so that integer generator kinks (hat) land on panel
// boundaries, where composite Simpson keeps its full order.
inline double snap_down(double x, double unit) { return std::floor(x / unit) * unit; }
inline double snap_up(double x, double unit) { return std::ceil(x / unit) * unit; }

/// Composite Simpson on [a, b] with sub-interval width <= step.
template <typename F>
double simpson(F&& f, double a, double b, double step) {
  if (b <= a) return 0.0;
  const long half = std::max(1L, static_cast<long>(std::ceil((b - a) / (2.0 * step))));
  const long n = 2 * half;
  const double h = (b - a) / static_cast<double>(n);
  double acc = f(a) + f(b);
  for (long k = 1; k < n; k += 2) acc += 4.0 * f(a + h * static_cast<double>(k));
  for (long k = 2; k < n; k += 2) acc += 2.0 * f(a + h * static_cast<double>(k));
  return acc * h / 3.0;
}

}  // namespace rks
