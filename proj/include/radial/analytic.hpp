#pragma once

// Closed-form spectra and radial eigenfunctions for the confined sphere,
// the isotropic oscillator and the Coulomb potential in N >= 2 dimensions.
//
// Every formula is written once in terms of K = k + l; the (N, l) entry points
// only reduce and forward. Wavefunctions are returned raw (constant c = 1) as
// R^l_k(r) samples; normalize() fixes the constant.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "radial/errors.hpp"
#include "radial/quadrature.hpp"
#include "radial/reduction.hpp"
#include "radial/specfun.hpp"

namespace radial {

enum class NormStatus { raw, normalized };
enum class Provenance { analytic, oracle };

inline const char* to_string(Provenance p) {
  return p == Provenance::analytic ? "analytic" : "oracle";
}

struct Eigenstate {
  int n_r = 0;
  double energy = 0.0;
  RadialFunction fn;
  NormStatus norm_status = NormStatus::raw;
  Provenance provenance = Provenance::analytic;
};

struct SpectrumEntry {
  int n_r = 0;
  double energy = 0.0;
};

struct SpectrumTable {
  RadialProblem problem;
  Provenance provenance = Provenance::analytic;
  std::vector<SpectrumEntry> entries;
};

namespace analytic {

/// Largest K inside the validated special-function envelope.
inline constexpr double kMaxK = 30.0;

/// reduce() plus the K envelope check shared by every analytic entry point.
inline ReducedProblem checked_reduce(int dim, int l) {
  const ReducedProblem red = reduce(dim, l);
  if (red.K.value() > kMaxK) {
    throw RangeError("K = " + red.K.to_string() + " exceeds the supported range (K <= 30)");
  }
  return red;
}

inline void check_n_r(int n_r) {
  if (n_r < 0) throw DomainError("radial quantum number must be >= 0");
}

// ---------------------------------------------------------------------------
// K-based formulas

/// E = j_{K-1/2, n_r+1}^2 / (2 a^2).
inline double box_energy_K(double a, HalfInteger K, int n_r) {
  const double j = specfun::bessel_j_zero(K.value() - 0.5, n_r + 1);
  return j * j / (2.0 * a * a);
}

/// E = omega (2 n_r + K + 1/2).
inline double oscillator_energy_K(double omega, HalfInteger K, int n_r) {
  return omega * (2.0 * n_r + K.value() + 0.5);
}

/// E = -zeta^2 / (2 n^2), n = n_r + K. Bound states are negative.
inline double coulomb_energy_K(double zeta, HalfInteger K, int n_r) {
  const double n = n_r + K.value();
  return -zeta * zeta / (2.0 * n * n);
}

// ---------------------------------------------------------------------------
// (N, l) entry points

inline double box_energy(double a, int dim, int l, int n_r) {
  if (!(a > 0.0)) throw DomainError("box radius must be positive");
  check_n_r(n_r);
  return box_energy_K(a, checked_reduce(dim, l).K, n_r);
}

inline double oscillator_energy(double omega, int dim, int l, int n_r) {
  if (!(omega > 0.0)) throw DomainError("oscillator frequency must be positive");
  check_n_r(n_r);
  return oscillator_energy_K(omega, checked_reduce(dim, l).K, n_r);
}

inline double coulomb_energy(double zeta, int dim, int l, int n_r) {
  if (!(zeta > 0.0)) throw DomainError("Coulomb strength must be positive");
  check_n_r(n_r);
  return coulomb_energy_K(zeta, checked_reduce(dim, l).K, n_r);
}

/// Box state R^l_k(r) = r^{-k} sqrt(qr) J_{K-1/2}(qr), q = j_{K-1/2,n_r+1}/a.
/// The wall sample r = a is exactly zero; r > a is rejected.
inline Eigenstate box_wavefunction(double a, int dim, int l, int n_r,
                                   const std::vector<double>& grid) {
  const double energy = box_energy(a, dim, l, n_r);
  const ReducedProblem red = checked_reduce(dim, l);
  const double nu = red.K.value() - 0.5;
  const double q = std::sqrt(2.0 * energy);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    if (r > a) throw DomainError("box_wavefunction: grid point outside the wall");
    if (r == a) {
      values[i] = 0.0;
      continue;
    }
    const double qr = q * r;
    values[i] = std::sqrt(qr) * specfun::bessel_j(nu, qr) / std::pow(r, red.k.value());
  }
  return {n_r, energy, RadialFunction(grid, std::move(values), Representation::R_full),
          NormStatus::raw, Provenance::analytic};
}

/// Oscillator state R^l_k(r) = r^l exp(-omega r^2 / 2) 1F1(-n_r; K+1/2; omega r^2).
inline Eigenstate oscillator_wavefunction(double omega, int dim, int l, int n_r,
                                          const std::vector<double>& grid) {
  const double energy = oscillator_energy(omega, dim, l, n_r);
  const double b = checked_reduce(dim, l).K.value() + 0.5;
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid[i];
    const double x = omega * r * r;
    values[i] = std::pow(r, l) * std::exp(-0.5 * x) * specfun::kummer_poly(n_r, b, x);
  }
  return {n_r, energy, RadialFunction(grid, std::move(values), Representation::R_full),
          NormStatus::raw, Provenance::analytic};
}

/// Coulomb state R^l_k(r) = rho^l exp(-rho/2) L_{n_r}^{(2K-1)}(rho),
/// rho = alpha_n r, alpha_n = 2 zeta / n, n = n_r + K.
inline Eigenstate coulomb_wavefunction(double zeta, int dim, int l, int n_r,
                                       const std::vector<double>& grid) {
  const double energy = coulomb_energy(zeta, dim, l, n_r);
  const HalfInteger K = checked_reduce(dim, l).K;
  const double alpha = 2.0 * zeta / (n_r + K.value());
  const double laguerre_alpha = 2.0 * K.value() - 1.0;
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double rho = alpha * grid[i];
    values[i] = std::pow(rho, l) * std::exp(-0.5 * rho) * specfun::laguerre(n_r, laguerre_alpha, rho);
  }
  return {n_r, energy, RadialFunction(grid, std::move(values), Representation::R_full),
          NormStatus::raw, Provenance::analytic};
}

// ---------------------------------------------------------------------------
// Grids and normalization

inline std::vector<double> uniform_grid(double r_min, double r_max, std::size_t count) {
  if (!(r_min > 0.0) || !(r_max > r_min) || count < 2) {
    throw DomainError("uniform_grid: need 0 < r_min < r_max and count >= 2");
  }
  std::vector<double> grid(count);
  const double h = (r_max - r_min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = r_min + h * static_cast<double>(i);
  grid.back() = r_max;
  return grid;
}

/// Outer radius of the default sampling grid.
inline double default_r_max(const PotentialSpec& spec, HalfInteger K, int n_r) {
  const double Kv = K.value();
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, InfiniteWell>) {
          return p.a;
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          return 6.0 / std::sqrt(p.omega) * std::sqrt(2.0 * n_r + Kv + 1.0);
        } else if constexpr (std::is_same_v<T, Coulomb>) {
          const double n = n_r + Kv;
          return 3.0 * n * (n + 1.0) / p.zeta;
        } else {
          // Outward doubling until the potential dominates the expected level
          // scale; the oracle extends further if the tail is too short.
          const double target = 25.0 * (n_r + Kv + 1.0);
          double r = 0.5;
          for (int i = 0; i < 60 && potential_value(spec, r) < target; ++i) r *= 2.0;
          return r;
        }
      },
      spec);
}

/// 4000 (by default) uniform samples on [r_max 1e-4, r_max].
inline std::vector<double> default_grid(const PotentialSpec& spec, HalfInteger K, int n_r,
                                        std::size_t samples = 4000) {
  const double r_max = default_r_max(spec, K, n_r);
  return uniform_grid(r_max * 1e-4, r_max, samples);
}

namespace detail {

// Simpson over the first `count` samples plus [0, r0] from the local power law
// of the first two samples.
inline double integrate_from_origin(const std::vector<double>& grid,
                                    const std::vector<double>& integrand, std::size_t count) {
  double total = simpson(std::span(grid.data(), count), std::span(integrand.data(), count));
  if (integrand[0] != 0.0 && integrand[1] != 0.0) {
    const double p = std::log(std::abs(integrand[1] / integrand[0])) / std::log(grid[1] / grid[0]);
    if (std::isfinite(p) && p > -1.0) total += integrand[0] * grid[0] / (p + 1.0);
  }
  return total;
}

}  // namespace detail

/// Rescales so that int_0^inf R^2 r^{N-1} dr = 1 and R > 0 near the origin.
///
/// Simpson on the sample grid, plus the segment [0, r_0] from the local power
/// law of the first two samples. Samples beyond the point where
/// |R| r^{(N-1)/2} drops below 1e-12 of its peak are ignored. A tail that is
/// still large and growing at the end of the grid is reported as
/// non-integrable.
inline Eigenstate normalize(const Eigenstate& state, int dim) {
  require_representation(state.fn, Representation::R_full, "normalize");
  if (dim < 2) throw DomainError("normalize: dimension must be >= 2");
  const auto& grid = state.fn.grid();
  const auto& values = state.fn.values();
  const std::size_t n = grid.size();
  if (n < 3) throw NumericalError("normalize: need at least three samples");

  std::vector<double> integrand(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    integrand[i] = values[i] * values[i] * std::pow(grid[i], dim - 1);
    if (!std::isfinite(integrand[i])) throw NumericalError("normalize: non-finite sample");
    peak = std::max(peak, integrand[i]);
  }
  if (!(peak > 0.0)) throw NumericalError("normalize: function vanishes identically");

  // A tail that dips to a minimum and then climbs steeply back up is the
  // signature of an exponentially growing (non-normalizable) solution.
  std::size_t dip = n - 1;
  while (dip > 0 && integrand[dip - 1] < integrand[dip]) --dip;
  if (dip + 1 < n && dip > 0 && integrand[n - 1] > 1e-6 * peak &&
      integrand[n - 1] > 10.0 * integrand[dip]) {
    throw NumericalError("normalize: diverging tail, not integrable");
  }

  std::size_t last = n;
  const double cutoff = 1e-24 * peak;  // (1e-12 in amplitude)^2
  while (last > 3 && integrand[last - 1] < cutoff) --last;

  const double norm2 = detail::integrate_from_origin(grid, integrand, last);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw NumericalError("normalize: bad norm");

  double scale = 1.0 / std::sqrt(norm2);
  for (double v : values) {
    if (v != 0.0) {
      if (v < 0.0) scale = -scale;
      break;
    }
  }
  std::vector<double> scaled(values);
  for (double& v : scaled) v *= scale;
  return {state.n_r, state.energy,
          RadialFunction(grid, std::move(scaled), Representation::R_full),
          NormStatus::normalized, state.provenance};
}

/// int_0^inf R_a R_b r^{N-1} dr for two states sampled on the same grid.
inline double overlap(const Eigenstate& a, const Eigenstate& b, int dim) {
  require_representation(a.fn, Representation::R_full, "overlap");
  require_representation(b.fn, Representation::R_full, "overlap");
  const auto& r = a.fn.grid();
  if (r != b.fn.grid()) throw ContractError("overlap: states live on different grids");
  if (r.size() < 3) throw NumericalError("overlap: need at least three samples");
  std::vector<double> f(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    f[i] = a.fn.values()[i] * b.fn.values()[i] * std::pow(r[i], dim - 1);
  }
  return detail::integrate_from_origin(r, f, r.size());
}

/// Interior sign changes of the samples (exact zeros are skipped).
inline int count_nodes(const std::vector<double>& values) {
  int nodes = 0;
  int last_sign = 0;
  for (double v : values) {
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

inline int count_nodes(const RadialFunction& fn) { return count_nodes(fn.values()); }

// ---------------------------------------------------------------------------
// Dispatch on PotentialSpec

inline bool has_closed_form(const PotentialSpec& spec) {
  return !std::holds_alternative<PowerSeries>(spec);
}

inline double energy(const RadialProblem& problem, int n_r) {
  validate(problem.potential);
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, InfiniteWell>) {
          return box_energy(p.a, problem.dim, problem.l, n_r);
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          return oscillator_energy(p.omega, problem.dim, problem.l, n_r);
        } else if constexpr (std::is_same_v<T, Coulomb>) {
          return coulomb_energy(p.zeta, problem.dim, problem.l, n_r);
        } else {
          throw ContractError("no closed-form spectrum for a power-series potential");
        }
      },
      problem.potential);
}

/// Raw state sampled on `grid`.
inline Eigenstate state(const RadialProblem& problem, int n_r, const std::vector<double>& grid) {
  validate(problem.potential);
  return std::visit(
      [&](const auto& p) -> Eigenstate {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, InfiniteWell>) {
          return box_wavefunction(p.a, problem.dim, problem.l, n_r, grid);
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          return oscillator_wavefunction(p.omega, problem.dim, problem.l, n_r, grid);
        } else if constexpr (std::is_same_v<T, Coulomb>) {
          return coulomb_wavefunction(p.zeta, problem.dim, problem.l, n_r, grid);
        } else {
          throw ContractError("no closed-form eigenfunction for a power-series potential");
        }
      },
      problem.potential);
}

/// Normalized state on the default grid.
inline Eigenstate normalized_state(const RadialProblem& problem, int n_r,
                                   std::size_t samples = 4000) {
  const HalfInteger K = checked_reduce(problem.dim, problem.l).K;
  return normalize(state(problem, n_r, default_grid(problem.potential, K, n_r, samples)),
                   problem.dim);
}

inline SpectrumTable spectrum(const RadialProblem& problem, int levels) {
  if (levels < 0) throw DomainError("spectrum: level count must be >= 0");
  SpectrumTable table{problem, Provenance::analytic, {}};
  for (int n_r = 0; n_r < levels; ++n_r) table.entries.push_back({n_r, energy(problem, n_r)});
  return table;
}

}  // namespace analytic
}  // namespace radial
