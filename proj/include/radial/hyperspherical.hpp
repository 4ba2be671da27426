#pragma once

// Hyperspherical coordinates in N dimensions and a finite-difference check of
// the radial/angular split of the Laplacian.
//
//   q_1 = r cos t_1
//   q_j = r sin t_1 ... sin t_{j-1} cos t_j     (2 <= j <= N-1)
//   q_N = r sin t_1 ... sin t_{N-1}
//
// with t_1..t_{N-2} in [0, pi] and t_{N-1} in [0, 2 pi).

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "radial/errors.hpp"

namespace radial::hyperspherical {

struct HyperPoint {
  double r = 0.0;
  std::vector<double> angles;  // N-1 angles
};

inline void validate(const HyperPoint& p, int dim) {
  if (dim < 2) throw DomainError("hyperspherical: dimension must be >= 2");
  if (!(p.r >= 0.0)) throw DomainError("hyperspherical: radius must be >= 0");
  if (p.angles.size() != static_cast<std::size_t>(dim - 1)) {
    throw DomainError("hyperspherical: expected " + std::to_string(dim - 1) + " angles, got " +
                      std::to_string(p.angles.size()));
  }
  for (std::size_t i = 0; i < p.angles.size(); ++i) {
    const double t = p.angles[i];
    const bool last = i + 1 == p.angles.size();
    const double upper = last ? 2.0 * std::numbers::pi : std::numbers::pi;
    const bool ok = last ? (t >= 0.0 && t < upper) : (t >= 0.0 && t <= upper);
    if (!ok) throw DomainError("hyperspherical: angle " + std::to_string(i + 1) + " out of range");
  }
}

inline std::vector<double> to_cartesian(const HyperPoint& p, int dim) {
  validate(p, dim);
  std::vector<double> q(static_cast<std::size_t>(dim));
  double sin_chain = p.r;
  for (int j = 0; j < dim - 1; ++j) {
    q[j] = sin_chain * std::cos(p.angles[j]);
    sin_chain *= std::sin(p.angles[j]);
  }
  q[dim - 1] = sin_chain;
  return q;
}

/// Inverse map. Once the remaining sub-vector vanishes (point on a
/// coordinate axis) the remaining angles are set to 0. The origin maps to
/// r = 0 with all angles 0.
inline HyperPoint from_cartesian(std::span<const double> q) {
  const int dim = static_cast<int>(q.size());
  if (dim < 2) throw DomainError("hyperspherical: dimension must be >= 2");
  HyperPoint p;
  p.angles.assign(static_cast<std::size_t>(dim - 1), 0.0);

  // tail[j] = |(q_j, ..., q_N)|, accumulated from the end to avoid cancellation.
  std::vector<double> tail(static_cast<std::size_t>(dim) + 1, 0.0);
  for (int j = dim - 1; j >= 0; --j) tail[j] = std::hypot(tail[j + 1], q[j]);
  p.r = tail[0];

  for (int j = 0; j < dim - 2; ++j) {
    if (tail[j] == 0.0) return p;
    p.angles[j] = std::atan2(tail[j + 1], q[j]);
  }
  if (tail[dim - 2] == 0.0) return p;
  double last = std::atan2(q[dim - 1], q[dim - 2]);
  if (last < 0.0) last += 2.0 * std::numbers::pi;
  if (last >= 2.0 * std::numbers::pi) last = 0.0;
  p.angles[dim - 2] = last;
  return p;
}

/// Eigenvalue l(l + n - 1) of the squared angular momentum on the n-sphere.
inline std::int64_t angular_eigenvalue(int l, int n) {
  if (l < 0) throw DomainError("angular_eigenvalue: l must be >= 0");
  if (n < 1) throw DomainError("angular_eigenvalue: n must be >= 1");
  return static_cast<std::int64_t>(l) * (static_cast<std::int64_t>(l) + n - 1);
}

/// Radial profile g(r) with its first two derivatives.
struct RadialProfile {
  std::function<double(double)> value;
  std::function<double(double)> first;
  std::function<double(double)> second;
};

/// Degree-l harmonic polynomial used as the angular factor: 1, q_1, q_1 q_2.
inline double harmonic_polynomial(int l, std::span<const double> q) {
  switch (l) {
    case 0: return 1.0;
    case 1: return q[0];
    case 2: return q[0] * q[1];
    default: throw DomainError("harmonic_polynomial: only l <= 2 is provided");
  }
}

inline constexpr double kShellInner = 0.5;
inline constexpr double kShellOuter = 1.5;

/// Max over a fixed set of points in the shell 0.5 <= r <= 1.5 of
///
///   | Lap_FD f - [ R'' + (N-1) R'/r - l(l+N-2) R / r^2 ] Y |
///
/// for f(q) = P_l(q) g(r), where R = r^l g is the radial factor,
/// Y = P_l / r^l the angular factor, l(l+N-2) = angular_eigenvalue(l, N-1),
/// and Lap_FD the second-order central-difference Cartesian Laplacian.
/// `coupling` replaces l(l+N-2) when given, to probe which value closes it.
inline double laplacian_consistency(const RadialProfile& g, int l, int dim, double h,
                                    std::optional<double> coupling_override = std::nullopt) {
  if (dim < 2) throw DomainError("laplacian_consistency: dimension must be >= 2");
  if (l < 0 || l > 2) throw DomainError("laplacian_consistency: l must be 0, 1 or 2");
  if (!(h > 0.0) || h > 0.1 * kShellInner) {
    throw DomainError("laplacian_consistency: step too large for the test shell");
  }

  const double coupling =
      coupling_override.value_or(static_cast<double>(angular_eigenvalue(l, dim - 1)));
  auto f = [&](std::span<const double> q) {
    double r2 = 0.0;
    for (double x : q) r2 += x * x;
    return harmonic_polynomial(l, q) * g.value(std::sqrt(r2));
  };

  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> radius(kShellInner + 0.1, kShellOuter - 0.1);
  double worst = 0.0;
  std::vector<double> q(static_cast<std::size_t>(dim));
  std::vector<double> shifted(q.size());
  for (int sample = 0; sample < 24; ++sample) {
    double norm = 0.0;
    for (double& x : q) {
      x = gauss(rng);
      norm += x * x;
    }
    const double r = radius(rng);
    for (double& x : q) x *= r / std::sqrt(norm);

    const double centre = f(q);
    double lap = 0.0;
    for (int i = 0; i < dim; ++i) {
      shifted = q;
      shifted[i] = q[i] + h;
      const double plus = f(shifted);
      shifted[i] = q[i] - h;
      const double minus = f(shifted);
      lap += (plus - 2.0 * centre + minus) / (h * h);
    }

    // R = r^l g and its derivatives by the product rule.
    const double rl = std::pow(r, l);
    const double rl1 = l >= 1 ? l * std::pow(r, l - 1) : 0.0;
    const double rl2 = l >= 2 ? l * (l - 1) * std::pow(r, l - 2) : 0.0;
    const double g0 = g.value(r), g1 = g.first(r), g2 = g.second(r);
    const double R0 = rl * g0;
    const double R1 = rl1 * g0 + rl * g1;
    const double R2 = rl2 * g0 + 2.0 * rl1 * g1 + rl * g2;
    const double radial = R2 + (dim - 1) * R1 / r - coupling * R0 / (r * r);
    const double angular = harmonic_polynomial(l, q) / rl;
    worst = std::max(worst, std::abs(lap - radial * angular));
  }
  return worst;
}

}  // namespace radial::hyperspherical
