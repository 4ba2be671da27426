#pragma once

// Shooting-method eigensolver for the reduced radial equation
//
//   psi'' = 2 (W(r) - E) psi,   W(r) = V(r) + K(K-1)/(2 r^2),
//
// used as an independent check of the closed-form results and as the only
// solver for power-series potentials.
//
// The equation is integrated on a logarithmic grid x = ln r with
// psi = sqrt(r) u(x), which turns it into
//
//   u'' = f(x) u,   f = 2 r^2 (W - E) + 1/4 = 2 r^2 (V - E) + (K - 1/2)^2.
//
// f is regular at the origin for every K, so Numerov keeps its O(h^4) order
// and the seed u ~ r^{K-1/2} (psi ~ r^K) is exact to leading order.

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "radial/analytic.hpp"
#include "radial/errors.hpp"
#include "radial/reduction.hpp"

namespace radial::oracle {

struct NumericsConfig {
  double r_min = 1e-5;
  double r_max = 1.0;
  int steps = 10000;
  double energy_tol = 1e-10;  // final bisection width
  int max_bisections = 200;
};

inline void validate(const NumericsConfig& cfg) {
  if (!(cfg.r_min > 0.0) || !(cfg.r_max > cfg.r_min)) {
    throw DomainError("numerics: need 0 < r_min < r_max");
  }
  if (cfg.steps < 10000) throw DomainError("numerics: steps must be >= 10000");
  if (!(cfg.energy_tol > 0.0)) throw DomainError("numerics: energy_tol must be positive");
  if (cfg.max_bisections < 1) throw DomainError("numerics: max_bisections must be >= 1");
}

/// r_max from the analytic sampling defaults, r_min = r_max 1e-5.
inline NumericsConfig default_config(const PotentialSpec& spec, HalfInteger K, int n_r) {
  NumericsConfig cfg;
  cfg.r_max = analytic::default_r_max(spec, K, n_r);
  cfg.r_min = cfg.r_max * 1e-5;
  return cfg;
}

struct NumerovResult {
  RadialFunction psi;       // psi_K, scaled to max |psi| = 1
  int node_count = 0;       // interior sign changes
  double boundary_residual = 0.0;  // psi(r_max) on the same scale
};

namespace detail {

/// Energy-independent pieces of f on the log grid: f_i = base_i - weight_i E.
struct Discretization {
  std::vector<double> r;
  std::vector<double> base;    // 2 r^2 W(r) + 1/4
  std::vector<double> weight;  // 2 r^2
  double h = 0.0;
  double seed_ratio = 1.0;     // exp((K - 1/2) h)
  double K = 1.0;
  double coulomb_part = 0.0;   // c_{-1}: coefficient of 1/r in V
  double constant_part = 0.0;  // c_0: constant term of V
};

/// Coefficients of 1/r and r^0 in V; they fix the first two corrections of
/// psi = r^K (1 + a r + b r^2 + ...) near the origin.
inline std::pair<double, double> origin_coefficients(const PotentialSpec& spec) {
  if (const auto* c = std::get_if<Coulomb>(&spec)) return {-c->zeta, 0.0};
  if (const auto* series = std::get_if<PowerSeries>(&spec)) {
    double c_m1 = 0.0, c_0 = 0.0;
    for (const auto& t : series->terms) {
      if (t.exponent == -1.0) c_m1 += t.coefficient;
      if (t.exponent == 0.0) c_0 += t.coefficient;
    }
    return {c_m1, c_0};
  }
  return {0.0, 0.0};
}

/// Seed values u_0, u_1 (scaled so the bare power law starts at 1).
inline std::pair<double, double> seeds(const Discretization& d, double E) {
  const double a = d.coulomb_part / d.K;
  const double b = (2.0 * d.coulomb_part * a + 2.0 * (d.constant_part - E)) / (4.0 * d.K + 2.0);
  auto series = [&](double r) { return 1.0 + r * (a + r * b); };
  return {series(d.r[0]), d.seed_ratio * series(d.r[1])};
}

template <class Potential>
Discretization discretize(const Potential& W, const NumericsConfig& cfg, HalfInteger K) {
  validate(cfg);
  Discretization d;
  const std::size_t n = static_cast<std::size_t>(cfg.steps) + 1;
  const double x0 = std::log(cfg.r_min);
  const double x1 = std::log(cfg.r_max);
  d.h = (x1 - x0) / cfg.steps;
  d.r.resize(n);
  d.base.resize(n);
  d.weight.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = i + 1 == n ? cfg.r_max : std::exp(x0 + d.h * static_cast<double>(i));
    d.r[i] = r;
    d.weight[i] = 2.0 * r * r;
    d.base[i] = d.weight[i] * W(r) + 0.25;
    if (!std::isfinite(d.base[i])) {
      throw NumericalError("numerov: potential is not finite on the grid",
                           "r=" + std::to_string(r));
    }
  }
  d.seed_ratio = std::exp((K.value() - 0.5) * d.h);
  d.K = K.value();
  if constexpr (std::is_same_v<Potential, EffectivePotential>) {
    std::tie(d.coulomb_part, d.constant_part) = origin_coefficients(W.potential());
  }
  return d;
}

inline constexpr double kRescale = 1e200;

struct Sweep {
  int nodes = 0;
  double residual = 0.0;  // u_end / max|u|
  std::vector<double> u;  // filled only when requested
};

/// Outward Numerov sweep at energy E.
inline Sweep sweep(const Discretization& d, double E, bool keep) {
  const std::size_t n = d.r.size();
  const double c = d.h * d.h / 12.0;
  Sweep out;
  if (keep) out.u.resize(n);
  auto [u_prev, u_curr] = seeds(d, E);
  double w_prev = 1.0 - c * (d.base[0] - d.weight[0] * E);
  double w_curr = 1.0 - c * (d.base[1] - d.weight[1] * E);
  double max_abs = std::max(std::abs(u_prev), std::abs(u_curr));
  if (keep) {
    out.u[0] = u_prev;
    out.u[1] = u_curr;
  }
  int last_sign = 1;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double w_next = 1.0 - c * (d.base[i + 1] - d.weight[i + 1] * E);
    double u_next = ((12.0 - 10.0 * w_curr) * u_curr - w_prev * u_prev) / w_next;
    if (std::abs(u_next) > kRescale) {
      u_next /= kRescale;
      u_curr /= kRescale;
      max_abs /= kRescale;
      if (keep) {
        for (std::size_t j = 0; j <= i; ++j) out.u[j] /= kRescale;
      }
    }
    if (!std::isfinite(u_next)) {
      std::ostringstream os;
      os << "E=" << E << " r=" << d.r[i + 1];
      throw NumericalError("numerov: overflow survived rescaling", os.str());
    }
    const int s = (u_next > 0.0) - (u_next < 0.0);
    if (s != 0) {
      if (s != last_sign) ++out.nodes;
      last_sign = s;
    }
    max_abs = std::max(max_abs, std::abs(u_next));
    if (keep) out.u[i + 1] = u_next;
    u_prev = u_curr;
    u_curr = u_next;
    w_prev = w_curr;
    w_curr = w_next;
  }
  out.residual = u_curr / max_abs;
  return out;
}

/// Inward sweep from u(r_max) = 0 down to index `stop`; returns v on [stop, end].
inline std::vector<double> sweep_inward(const Discretization& d, double E, std::size_t stop) {
  const std::size_t n = d.r.size();
  const double c = d.h * d.h / 12.0;
  std::vector<double> v(n, 0.0);
  v[n - 1] = 0.0;
  v[n - 2] = 1.0;
  for (std::size_t i = n - 2; i > stop; --i) {
    const double w_next = 1.0 - c * (d.base[i + 1] - d.weight[i + 1] * E);
    const double w_curr = 1.0 - c * (d.base[i] - d.weight[i] * E);
    const double w_prev = 1.0 - c * (d.base[i - 1] - d.weight[i - 1] * E);
    v[i - 1] = ((12.0 - 10.0 * w_curr) * v[i] - w_next * v[i + 1]) / w_prev;
    if (std::abs(v[i - 1]) > kRescale) {
      for (std::size_t j = i - 1; j < n; ++j) v[j] /= kRescale;
    }
  }
  return v;
}

inline RadialFunction to_psi(const Discretization& d, const std::vector<double>& u) {
  std::vector<double> psi(u.size());
  double max_abs = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    psi[i] = u[i] * std::sqrt(d.r[i]);
    max_abs = std::max(max_abs, std::abs(psi[i]));
  }
  if (max_abs > 0.0) {
    for (double& p : psi) p /= max_abs;
  }
  return RadialFunction(d.r, std::move(psi), Representation::psi_K);
}

}  // namespace detail

/// Integrates the reduced equation outward from r_min at energy E, seeded
/// with the leading behavior psi ~ r^K (plus the 1/r and constant-term
/// corrections when W is an EffectivePotential).
template <class Potential>
NumerovResult integrate_numerov(const Potential& W, double E, const NumericsConfig& cfg,
                                HalfInteger K) {
  const detail::Discretization d = detail::discretize(W, cfg, K);
  detail::Sweep s = detail::sweep(d, E, true);
  RadialFunction psi = detail::to_psi(d, s.u);
  const double residual = psi.values().back();
  // A sign flip between the last two samples is a zero at the boundary, not
  // an interior node.
  const std::vector<double> interior(psi.values().begin(), psi.values().end() - 1);
  return {std::move(psi), analytic::count_nodes(interior), residual};
}

/// Eigenvalue and reduced eigenfunction psi_K of one state.
struct ReducedSolution {
  double energy = 0.0;
  RadialFunction psi;         // psi_K, max |psi| = 1, positive near the origin
  NumericsConfig config;      // the configuration actually used
  int bisections = 0;
};

namespace detail {

inline constexpr int kMaxExtensions = 6;
// Decay exponent int sqrt(f) dx required between the outer turning point and
// r_max; e^{-18} in amplitude puts the Dirichlet wall far below 1e-12 in E.
inline constexpr double kTailDecay = 18.0;

struct EnergySearch {
  double energy = 0.0;
  int bisections = 0;
};

inline EnergySearch find_energy(const Discretization& d, int n_r, const NumericsConfig& cfg) {
  auto count = [&](double E) { return sweep(d, E, false).nodes; };

  // Below min (W + 1/(8 r^2)) f >= 0 everywhere and u cannot turn over.
  // Below e_stable some w = 1 - h^2 f / 12 approaches 0; for w < 0 the
  // recurrence alternates sign and produces spurious nodes.
  double e_floor = std::numeric_limits<double>::infinity();
  double e_stable = -std::numeric_limits<double>::infinity();
  const double stable = 0.95 * 12.0 / (d.h * d.h);
  for (std::size_t i = 0; i < d.r.size(); ++i) {
    e_floor = std::min(e_floor, d.base[i] / d.weight[i]);
    e_stable = std::max(e_stable, (d.base[i] - stable) / d.weight[i]);
  }
  double lo = std::max(e_floor, e_stable);
  if (count(lo) > n_r) {
    std::ostringstream os;
    os << "lower bound E=" << lo << " already has " << count(lo) << " nodes";
    throw NumericalError("oracle: energy bracket not found", os.str());
  }
  double span = std::max(1.0, 1e-6 * std::abs(lo));
  double hi = lo + span;
  bool bracketed = false;
  for (int i = 0; i < 200; ++i) {
    if (count(hi) > n_r) {
      bracketed = true;
      break;
    }
    lo = hi;
    span *= 2.0;
    hi = lo + span;
  }
  if (!bracketed) {
    std::ostringstream os;
    os << "searched up to E=" << hi;
    throw NumericalError("oracle: energy bracket not found (window exhausted)", os.str());
  }

  int iterations = 0;
  while (hi - lo > cfg.energy_tol) {
    if (++iterations > cfg.max_bisections) {
      std::ostringstream os;
      os << "bracket=[" << lo << ", " << hi << "] after " << cfg.max_bisections
         << " bisections";
      throw NumericalError("oracle: bisection did not converge", os.str());
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // width at machine resolution
    if (count(mid) > n_r) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  // The end value of u changes sign exactly where the node count steps, so a
  // secant step on it sharpens the bracket mid-point.
  const double res_lo = sweep(d, lo, false).residual;
  const double res_hi = sweep(d, hi, false).residual;
  double energy = 0.5 * (lo + hi);
  if (res_lo != res_hi && (res_lo < 0.0) != (res_hi < 0.0)) {
    const double guess = lo - res_lo * (hi - lo) / (res_hi - res_lo);
    if (guess >= lo && guess <= hi) energy = guess;
  }
  return {energy, iterations};
}

/// Decay exponent from the outer turning point to r_max; 0 if r_max is
/// classically allowed.
inline double tail_decay(const Discretization& d, double E) {
  const std::size_t n = d.r.size();
  double decay = 0.0;
  for (std::size_t i = n - 1; i > 0; --i) {
    const double f = d.base[i] - d.weight[i] * E;
    if (f <= 0.0) break;
    decay += std::sqrt(f) * d.h;
  }
  const double f_end = d.base[n - 1] - d.weight[n - 1] * E;
  return f_end > 0.0 ? decay : 0.0;
}

/// u on the whole grid, with the classically forbidden tail replaced by an
/// inward solution so the end-point blow-up from the residual energy error
/// does not leak into the eigenfunction.
inline std::vector<double> eigenfunction(const Discretization& d, double E, int n_r) {
  Sweep out = sweep(d, E, true);
  const std::size_t n = d.r.size();
  std::size_t turning = 0;
  for (std::size_t i = n - 1; i > 0; --i) {
    if (d.base[i] - d.weight[i] * E < 0.0) {
      turning = i;
      break;
    }
  }
  if (turning == 0 || turning + 3 >= n) return std::move(out.u);

  const std::vector<double> v = sweep_inward(d, E, turning);
  if (v[turning] == 0.0 || !std::isfinite(v[turning])) return std::move(out.u);
  std::vector<double> spliced = out.u;
  const double scale = out.u[turning] / v[turning];
  for (std::size_t i = turning + 1; i < n; ++i) spliced[i] = scale * v[i];
  if (analytic::count_nodes(spliced) != n_r) return std::move(out.u);
  return spliced;
}

}  // namespace detail

/// Solves the reduced problem for (potential, K) and the n_r-th state.
///
/// Soft potentials: if r_max is not deep enough in the classically forbidden
/// region for the converged energy, r_max and r_min are doubled (up to six
/// times) and the search repeats. The infinite well always puts r_max at the
/// wall.
inline ReducedSolution solve_reduced(const PotentialSpec& spec, HalfInteger K, int n_r,
                                     std::optional<NumericsConfig> config = std::nullopt) {
  validate(spec);
  if (n_r < 0) throw DomainError("oracle: n_r must be >= 0");
  if (!is_confining(spec)) {
    throw DomainError("oracle: potential is not confining; no bound states to bracket");
  }
  NumericsConfig cfg = config.value_or(default_config(spec, K, n_r));
  const bool box = std::holds_alternative<InfiniteWell>(spec);
  if (box) {
    const double a = std::get<InfiniteWell>(spec).a;
    cfg.r_min = a * (cfg.r_min / cfg.r_max);
    cfg.r_max = a;
  }
  validate(cfg);

  const EffectivePotential W(spec, K);
  for (int attempt = 0;; ++attempt) {
    const detail::Discretization d = detail::discretize(W, cfg, K);
    const detail::EnergySearch found = detail::find_energy(d, n_r, cfg);
    const bool tail_ok = box || detail::tail_decay(d, found.energy) >= detail::kTailDecay;
    if (tail_ok || attempt == detail::kMaxExtensions) {
      if (!tail_ok && detail::tail_decay(d, found.energy) == 0.0) {
        std::ostringstream os;
        os << "E=" << found.energy << " r_max=" << cfg.r_max;
        throw NumericalError("oracle: outer boundary still classically allowed", os.str());
      }
      std::vector<double> u = detail::eigenfunction(d, found.energy, n_r);
      if (box) u.back() = 0.0;  // Dirichlet wall
      RadialFunction psi = detail::to_psi(d, u);
      return {found.energy, std::move(psi), cfg, found.bisections};
    }
    cfg.r_max *= 2.0;
    cfg.r_min *= 2.0;
  }
}

/// Oracle eigenstate of an N-dimensional problem: solve for psi_K, lift to
/// R^l_k and normalize under the r^{N-1} measure.
inline Eigenstate solve_state(const RadialProblem& problem, int n_r,
                              std::optional<NumericsConfig> config = std::nullopt) {
  const ReducedProblem red = reduce(problem);
  ReducedSolution sol = solve_reduced(problem.potential, red.K, n_r, config);
  Eigenstate raw{n_r, sol.energy, lift_wavefunction(sol.psi, red.k, problem.l), NormStatus::raw,
                 Provenance::oracle};
  return analytic::normalize(raw, problem.dim);
}

inline SpectrumTable spectrum(const RadialProblem& problem, int levels,
                              std::optional<NumericsConfig> config = std::nullopt) {
  if (levels < 0) throw DomainError("spectrum: level count must be >= 0");
  const HalfInteger K = reduce(problem).K;
  SpectrumTable table{problem, Provenance::oracle, {}};
  for (int n_r = 0; n_r < levels; ++n_r) {
    table.entries.push_back({n_r, solve_reduced(problem.potential, K, n_r, config).energy});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Equivalence verification

struct PartnerResult {
  DimAngular pair;
  std::optional<double> energy;
  std::optional<RadialFunction> psi;  // normalized psi_K, max-normalized
  std::string error;
};

struct LevelReport {
  int n_r = 0;
  std::vector<PartnerResult> partners;
  double max_energy_deviation = 0.0;
  double max_psi_deviation = 0.0;
  bool passed = false;
};

struct EquivalenceReport {
  HalfInteger K;
  double tol = 0.0;
  std::vector<DimAngular> pairs;
  std::vector<LevelReport> levels;
  bool passed = false;
  bool solver_failure = false;
};

/// Solves every (N, l) partner independently for n_r = n_r_min..n_r_max and
/// compares energies (tolerance tol) and max-normalized psi_K (10 tol).
/// All pairs must share K. A failing partner is recorded and the rest
/// continue.
inline EquivalenceReport verify_equivalence(const PotentialSpec& spec,
                                            const std::vector<DimAngular>& pairs, int n_r_max,
                                            std::optional<NumericsConfig> config, double tol,
                                            int n_r_min = 0) {
  if (pairs.empty()) throw ContractError("verify_equivalence: no pairs given");
  if (n_r_max < 0 || n_r_min < 0) {
    throw DomainError("verify_equivalence: n_r range must be >= 0");
  }
  if (!(tol > 0.0)) throw DomainError("verify_equivalence: tol must be positive");
  const HalfInteger K = reduce(pairs.front().dim, pairs.front().l).K;
  for (const auto& p : pairs) {
    if (reduce(p.dim, p.l).K != K) {
      throw ContractError("verify_equivalence: pairs do not share K (" + K.to_string() +
                          " vs " + reduce(p.dim, p.l).K.to_string() + ")");
    }
  }

  EquivalenceReport report{K, tol, pairs, {}, true, false};
  for (int n_r = n_r_min; n_r <= n_r_max; ++n_r) {
    LevelReport level{n_r, {}, 0.0, 0.0, true};
    for (const auto& p : pairs) {
      PartnerResult result{p, std::nullopt, std::nullopt, {}};
      try {
        const RadialProblem problem{p.dim, p.l, spec};
        const Eigenstate st = solve_state(problem, n_r, config);
        RadialFunction psi = reduced_wavefunction(st.fn, reduce(problem).k);
        double max_abs = 0.0;
        for (double v : psi.values()) max_abs = std::max(max_abs, std::abs(v));
        for (double& v : psi.mutable_values()) v /= max_abs;
        result.energy = st.energy;
        result.psi = std::move(psi);
      } catch (const std::exception& e) {
        result.error = e.what();
        report.solver_failure = true;
        level.passed = false;
      }
      level.partners.push_back(std::move(result));
    }

    for (std::size_t i = 0; i < level.partners.size(); ++i) {
      for (std::size_t j = i + 1; j < level.partners.size(); ++j) {
        const auto& a = level.partners[i];
        const auto& b = level.partners[j];
        if (!a.energy || !b.energy) continue;
        level.max_energy_deviation =
            std::max(level.max_energy_deviation, std::abs(*a.energy - *b.energy));
        if (a.psi->grid() != b.psi->grid()) {
          level.max_psi_deviation = std::numeric_limits<double>::infinity();
          continue;
        }
        for (std::size_t s = 0; s < a.psi->size(); ++s) {
          level.max_psi_deviation = std::max(
              level.max_psi_deviation, std::abs(a.psi->values()[s] - b.psi->values()[s]));
        }
      }
    }
    if (level.max_energy_deviation > tol || level.max_psi_deviation > 10.0 * tol) {
      level.passed = false;
    }
    report.passed = report.passed && level.passed;
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace radial::oracle
