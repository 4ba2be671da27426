#pragma once

// Dimensional reduction of the radial Schrodinger equation.
//
// In N dimensions with angular momentum l, the substitution psi = r^k R with
// k = (N-1)/2 turns the radial equation into
//
//   -1/2 psi'' + [K(K-1)/(2 r^2) + V(r)] psi = E psi,   K = k + l,
//
// so the problem depends on (N, l) only through K. Odd N gives integer K
// (equivalent to a 3D problem with L = K-1), even N gives half-odd K
// (equivalent to a 2D problem with L = K-1/2). Units: hbar = m = 1.

#include <cmath>
#include <limits>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "radial/errors.hpp"

namespace radial {

/// Exact half-integer, stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger from_int(int value) { return HalfInteger(2 * value); }

  /// Accepts values within 1e-9 of a multiple of 1/2.
  static HalfInteger from_double(double value) {
    const double twice = 2.0 * value;
    const double rounded = std::round(twice);
    if (!std::isfinite(value) || std::abs(twice - rounded) > 1e-9 ||
        std::abs(rounded) > std::numeric_limits<int>::max() / 4) {
      throw DomainError("value is not a half-integer: " + std::to_string(value));
    }
    return HalfInteger(static_cast<int>(rounded));
  }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ + b.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.twice_ - b.twice_);
  }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

// ---------------------------------------------------------------------------
// Potentials

struct InfiniteWell {
  double a = 1.0;  // wall radius
};

struct Harmonic {
  double omega = 1.0;  // V = omega^2 r^2 / 2
};

struct Coulomb {
  double zeta = 1.0;  // Z e^2 > 0, V = -zeta / r
};

struct PowerTerm {
  double coefficient = 0.0;
  double exponent = 0.0;
};

/// V(r) = sum_i c_i r^{p_i}, p_i >= -1.
struct PowerSeries {
  std::vector<PowerTerm> terms;
};

using PotentialSpec = std::variant<InfiniteWell, Harmonic, Coulomb, PowerSeries>;

/// True if V grows without bound as r -> infinity (or confines at a wall).
inline bool is_confining(const PotentialSpec& spec) {
  if (const auto* series = std::get_if<PowerSeries>(&spec)) {
    for (const auto& term : series->terms) {
      if (term.exponent > 0.0 && term.coefficient > 0.0) return true;
    }
    return false;
  }
  return true;
}

inline void validate(const PotentialSpec& spec) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, InfiniteWell>) {
          if (!(p.a > 0.0)) throw DomainError("infinite well radius must be positive");
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          if (!(p.omega > 0.0)) throw DomainError("oscillator frequency must be positive");
        } else if constexpr (std::is_same_v<T, Coulomb>) {
          if (!(p.zeta > 0.0)) throw DomainError("Coulomb strength must be positive");
        } else {
          if (p.terms.empty()) throw DomainError("power series needs at least one term");
          for (const auto& term : p.terms) {
            if (!std::isfinite(term.coefficient) || !(term.exponent >= -1.0)) {
              throw DomainError("power series exponents must be >= -1");
            }
          }
        }
      },
      spec);
}

inline std::string potential_name(const PotentialSpec& spec) {
  switch (spec.index()) {
    case 0: return "box";
    case 1: return "oscillator";
    case 2: return "coulomb";
    default: return "powerseries";
  }
}

/// V(r) for r > 0. The infinite well is 0 for r <= a and +inf beyond.
inline double potential_value(const PotentialSpec& spec, double r) {
  return std::visit(
      [r](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, InfiniteWell>) {
          return r <= p.a ? 0.0 : std::numeric_limits<double>::infinity();
        } else if constexpr (std::is_same_v<T, Harmonic>) {
          return 0.5 * p.omega * p.omega * r * r;
        } else if constexpr (std::is_same_v<T, Coulomb>) {
          return -p.zeta / r;
        } else {
          double v = 0.0;
          for (const auto& term : p.terms) v += term.coefficient * std::pow(r, term.exponent);
          return v;
        }
      },
      spec);
}

// ---------------------------------------------------------------------------
// Problems

struct RadialProblem {
  int dim = 3;
  int l = 0;
  PotentialSpec potential = Harmonic{};
};

struct DimAngular {
  int dim = 0;
  int l = 0;
  friend bool operator==(const DimAngular&, const DimAngular&) = default;
};

struct ReducedProblem {
  HalfInteger k;      // (N-1)/2
  HalfInteger K;      // k + l
  int target_dim = 3; // 3 for odd N, 2 for even N
  int L_eff = 0;      // angular momentum of the equivalent 2D/3D problem
  int n_bar = 0;      // 2K+1 = N+2l, dimension of the equivalent S state
};

inline void validate_dim_l(int dim, int l) {
  if (dim < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(dim));
  if (l < 0) throw DomainError("angular momentum must be >= 0, got " + std::to_string(l));
}

inline ReducedProblem reduce(int dim, int l) {
  validate_dim_l(dim, l);
  ReducedProblem out;
  out.k = HalfInteger::from_twice(dim - 1);
  out.K = out.k + HalfInteger::from_int(l);
  if (dim % 2 == 1) {
    out.target_dim = 3;
    out.L_eff = out.K.twice() / 2 - 1;
  } else {
    out.target_dim = 2;
    out.L_eff = (out.K.twice() - 1) / 2;
  }
  out.n_bar = out.K.twice() + 1;
  return out;
}

inline ReducedProblem reduce(const RadialProblem& problem) {
  return reduce(problem.dim, problem.l);
}

/// All (N, l) with N = 2(K - l) + 1 and 2 <= N <= max_dim, ordered by
/// decreasing N.
inline std::vector<DimAngular> equivalent_problems(HalfInteger K, int max_dim) {
  if (K.twice() < 1) throw DomainError("K must be >= 1/2");
  std::vector<DimAngular> out;
  for (int l = 0;; ++l) {
    const int dim = K.twice() - 2 * l + 1;
    if (dim < 2) break;
    if (dim <= max_dim) out.push_back({dim, l});
  }
  return out;
}

/// W(r) = V(r) + K(K-1)/(2 r^2).
class EffectivePotential {
 public:
  EffectivePotential(PotentialSpec spec, HalfInteger K)
      : spec_(std::move(spec)), K_(K),
        centrifugal_(0.5 * K.value() * (K.value() - 1.0)) {
    validate(spec_);
  }

  double operator()(double r) const {
    if (!(r > 0.0)) throw DomainError("effective potential evaluated at r <= 0");
    return potential_value(spec_, r) + centrifugal_ / (r * r);
  }

  const PotentialSpec& potential() const { return spec_; }
  HalfInteger K() const { return K_; }

 private:
  PotentialSpec spec_;
  HalfInteger K_;
  double centrifugal_;
};

inline EffectivePotential effective_potential(const PotentialSpec& spec, HalfInteger K) {
  return EffectivePotential(spec, K);
}

// ---------------------------------------------------------------------------
// Sampled radial functions

enum class Representation {
  psi_K,     // reduced 1D function psi_K(r)
  R_full,    // N-dimensional radial function R^l_k(r) = psi_K / r^k
  R_target,  // radial function of the equivalent 2D/3D problem
};

inline const char* to_string(Representation rep) {
  switch (rep) {
    case Representation::psi_K: return "psi_K";
    case Representation::R_full: return "R_full";
    case Representation::R_target: return "R_target";
  }
  return "?";
}

class RadialFunction {
 public:
  RadialFunction(std::vector<double> grid, std::vector<double> values, Representation rep)
      : grid_(std::move(grid)), values_(std::move(values)), rep_(rep) {
    if (grid_.size() != values_.size()) {
      throw DomainError("radial function: grid and values differ in length");
    }
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      if (!(grid_[i] > 0.0)) throw DomainError("radial function: grid must be > 0");
      if (i > 0 && !(grid_[i] > grid_[i - 1])) {
        throw DomainError("radial function: grid must be strictly increasing");
      }
    }
  }

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }
  Representation representation() const { return rep_; }
  std::size_t size() const { return grid_.size(); }

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
  Representation rep_;
};

inline void require_representation(const RadialFunction& fn, Representation expected,
                                   const char* where) {
  if (fn.representation() != expected) {
    throw ContractError(std::string(where) + ": expected " + to_string(expected) + ", got " +
                        to_string(fn.representation()));
  }
}

/// R^l_k(r) = psi_K(r) / r^k (= r^l R_K(r)).
inline RadialFunction lift_wavefunction(const RadialFunction& psi, HalfInteger k, int l) {
  require_representation(psi, Representation::psi_K, "lift_wavefunction");
  if (l < 0) throw DomainError("lift_wavefunction: l must be >= 0");
  std::vector<double> values(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    values[i] = psi.values()[i] / std::pow(psi.grid()[i], k.value());
  }
  return RadialFunction(psi.grid(), std::move(values), Representation::R_full);
}

/// Inverse of the lift: psi_K(r) = r^k R^l_k(r).
inline RadialFunction reduced_wavefunction(const RadialFunction& full, HalfInteger k) {
  require_representation(full, Representation::R_full, "reduced_wavefunction");
  std::vector<double> values(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) {
    values[i] = full.values()[i] * std::pow(full.grid()[i], k.value());
  }
  return RadialFunction(full.grid(), std::move(values), Representation::psi_K);
}

/// Radial function of the equivalent problem: psi/r in 3D, psi/sqrt(r) in 2D.
inline RadialFunction project_to_target(const RadialFunction& psi, int target_dim) {
  require_representation(psi, Representation::psi_K, "project_to_target");
  if (target_dim != 2 && target_dim != 3) {
    throw DomainError("project_to_target: target dimension must be 2 or 3");
  }
  std::vector<double> values(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double r = psi.grid()[i];
    values[i] = psi.values()[i] / (target_dim == 3 ? r : std::sqrt(r));
  }
  return RadialFunction(psi.grid(), std::move(values), Representation::R_target);
}

}  // namespace radial
