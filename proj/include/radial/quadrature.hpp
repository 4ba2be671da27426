#pragma once

#include <cstddef>
#include <span>

#include "radial/errors.hpp"

namespace radial {

/// Composite Simpson rule on an arbitrary strictly increasing grid.
///
/// Each pair of adjacent intervals is integrated with the interpolating
/// quadratic. With an odd interval count the last interval reuses the
/// quadratic through the final three points. Exact for quadratics.
inline double simpson(std::span<const double> x, std::span<const double> f) {
  if (x.size() != f.size()) throw DomainError("simpson: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * (x[1] - x[0]) * (f[0] + f[1]);

  double total = 0.0;
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const double h0 = x[i + 1] - x[i];
    const double h1 = x[i + 2] - x[i + 1];
    const double hs = h0 + h1;
    total += hs / 6.0 *
             ((2.0 - h1 / h0) * f[i] + hs * hs / (h0 * h1) * f[i + 1] + (2.0 - h0 / h1) * f[i + 2]);
  }
  if (i + 1 < n) {
    // one interval [x_{n-2}, x_{n-1}] left over
    const double h0 = x[n - 2] - x[n - 3];
    const double h1 = x[n - 1] - x[n - 2];
    total += f[n - 1] * (2.0 * h1 * h1 + 3.0 * h0 * h1) / (6.0 * (h0 + h1)) +
             f[n - 2] * (h1 * h1 + 3.0 * h0 * h1) / (6.0 * h0) -
             f[n - 3] * h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
  }
  return total;
}

}  // namespace radial
