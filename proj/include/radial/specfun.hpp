#pragma once

// Special-function kernel: Gamma, Bessel J of real order, terminating Kummer
// series, generalized Laguerre polynomials and Bessel zeros.
//
// Operating envelope: orders -1/2 <= nu <= ~30 and arguments 0 <= x <= ~60.
// Everything here is a pure function of its arguments.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

#include "radial/errors.hpp"

namespace radial::specfun {

namespace detail {

// Lanczos approximation, g = 7, nine terms (Godfrey's coefficient set).
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline double lanczos_sum(double z) {
  double sum = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
    sum += kLanczosCoef[i] / (z + static_cast<double>(i));
  }
  return sum;
}

}  // namespace detail

/// Gamma function for x > 0.
inline double gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("gamma: argument must be positive");
  }
  if (x < 0.5) {
    // Reflection keeps the Lanczos sum in its accurate region.
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  const double z = x - 1.0;
  const double t = z + detail::kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) *
         detail::lanczos_sum(z);
}

/// log Gamma(x) for x > 0; used where Gamma itself would overflow.
inline double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: argument must be positive");
  }
  if (x < 0.5) {
    return std::log(gamma(x));
  }
  const double z = x - 1.0;
  const double t = z + detail::kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(detail::lanczos_sum(z));
}

namespace detail {

// S(nu, z) = sum_k (-z)^k / (k! (nu+1)_k), so that
// J_nu(x) = (x/2)^nu / Gamma(nu+1) * S(nu, x^2/4).
inline double bessel_series_sum(double nu, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 1000; ++k) {
    term *= -z / (static_cast<double>(k) * (nu + static_cast<double>(k)));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && k > z / (nu + k)) {
      break;
    }
  }
  return sum;
}

// Above this ratio z/(nu+1) the alternating series loses too many digits.
inline constexpr double kSeriesCancellationLimit = 1.5;

}  // namespace detail

/// Returns {J_nu(x), J_{nu+1}(x)} for nu >= -1/2, x > 0.
///
/// Small x relative to the order: direct ascending series. Otherwise both
/// values are seeded from the series at a shifted order mu = nu + m, where the
/// series is well conditioned, and carried down with the three-term recurrence
/// J_{n-1} = (2n/x) J_n - J_{n+1}. The recurrence is stable in the downward
/// direction, so the seeds fix the normalization.
inline std::pair<double, double> bessel_j_pair(double nu, double x) {
  const double z = 0.25 * x * x;
  const double half_x = 0.5 * x;
  if (z <= detail::kSeriesCancellationLimit * (nu + 1.0)) {
    const double log_pref = nu * std::log(half_x) - log_gamma(nu + 1.0);
    const double pref = std::exp(log_pref);
    const double j0 = pref * detail::bessel_series_sum(nu, z);
    const double j1 = pref * half_x / (nu + 1.0) * detail::bessel_series_sum(nu + 1.0, z);
    return {j0, j1};
  }

  const int shift =
      static_cast<int>(std::ceil(z / detail::kSeriesCancellationLimit - 1.0 - nu));
  const double mu = nu + shift;
  // Scaled seeds: J_{mu} = e^{log_scale} * upper_lo, J_{mu+1} = e^{log_scale} * upper_hi.
  double log_scale = mu * std::log(half_x) - log_gamma(mu + 1.0);
  double hi = half_x / (mu + 1.0) * detail::bessel_series_sum(mu + 1.0, z);
  double lo = detail::bessel_series_sum(mu, z);
  constexpr double kBig = 1e250;
  const double log_big = std::log(kBig);
  for (int step = shift; step > 0; --step) {
    const double order = nu + step;  // lo holds J_order, hi holds J_{order+1}
    const double next = 2.0 * order / x * lo - hi;
    hi = lo;
    lo = next;
    if (std::abs(lo) > kBig) {
      lo /= kBig;
      hi /= kBig;
      log_scale += log_big;
    }
  }
  const double scale = std::exp(log_scale);
  return {lo * scale, hi * scale};
}

/// Bessel function of the first kind J_nu(x), nu >= -1/2, x >= 0.
inline double bessel_j(double nu, double x) {
  if (!(nu >= -0.5)) {
    throw DomainError("bessel_j: order must be >= -1/2");
  }
  if (!(x >= 0.0)) {
    throw DomainError("bessel_j: argument must be nonnegative");
  }
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return bessel_j_pair(nu, x).first;
}

/// dJ_nu/dx = (nu/x) J_nu - J_{nu+1}.
inline double bessel_j_derivative(double nu, double x) {
  if (!(x > 0.0)) {
    throw DomainError("bessel_j_derivative: argument must be positive");
  }
  const auto [j, j_next] = bessel_j_pair(nu, x);
  return nu / x * j - j_next;
}

/// n-th positive zero (n >= 1) of J_nu.
///
/// Zeros of J_nu are simple and at least ~2.4 apart for nu >= -1/2, so a
/// scan with step 0.5 starting below the first zero brackets each one
/// exactly once. The bracket is tightened by bisection and polished with
/// Newton's method.
inline double bessel_j_zero(double nu, int n) {
  if (!(nu >= -0.5)) {
    throw DomainError("bessel_j_zero: order must be >= -1/2");
  }
  if (n < 1) {
    throw DomainError("bessel_j_zero: zero index must be >= 1");
  }
  constexpr double kScanStep = 0.5;
  constexpr int kScanBudget = 100000;

  // J_nu > 0 on (0, j_{nu,1}) and j_{nu,1} > nu for nu >= 0.
  double lo = std::max(nu, 1e-3);
  double f_lo = bessel_j(nu, lo);
  int found = 0;
  double hi = lo;
  double f_hi = f_lo;
  for (int i = 0; i < kScanBudget; ++i) {
    hi = lo + kScanStep;
    f_hi = bessel_j(nu, hi);
    if (f_hi == 0.0) {
      if (++found == n) return hi;
      lo = hi + 1e-9;
      f_lo = bessel_j(nu, lo);
      continue;
    }
    if ((f_lo < 0.0) != (f_hi < 0.0)) {
      if (++found == n) break;
    }
    lo = hi;
    f_lo = f_hi;
  }
  if (found != n) {
    std::ostringstream os;
    os << "nu=" << nu << " n=" << n << " zeros_found=" << found;
    throw NumericalError("bessel_j_zero: root not bracketed within scan budget", os.str());
  }

  for (int i = 0; i < 200 && hi - lo > 1e-6 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = bessel_j(nu, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }

  double root = 0.5 * (lo + hi);
  for (int i = 0; i < 20; ++i) {
    const auto [j, j_next] = bessel_j_pair(nu, root);
    const double slope = nu / root * j - j_next;
    const double step = j / slope;
    double next = root - step;
    if (next <= lo || next >= hi) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - root) <= 1e-15 * root) {
      root = next;
      break;
    }
    root = next;
  }
  return root;
}

/// Terminating confluent hypergeometric series 1F1(-n_r; b; x) as the exact
/// (n_r + 1)-term sum.
inline double kummer_poly(int n_r, double b, double x) {
  if (n_r < 0) {
    throw DomainError("kummer_poly: n_r must be nonnegative");
  }
  if (!(b > 0.0)) {
    throw DomainError("kummer_poly: b must be positive");
  }
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < n_r; ++j) {
    term *= (static_cast<double>(j - n_r) / (b + j)) * (x / (j + 1));
    sum += term;
  }
  return sum;
}

/// Generalized Laguerre polynomial L_n^{(alpha)}(x), modern convention
/// (degree n), by forward three-term recurrence.
inline double laguerre(int n, double alpha, double x) {
  if (n < 0) {
    throw DomainError("laguerre: degree must be nonnegative");
  }
  if (!(alpha > -1.0)) {
    throw DomainError("laguerre: alpha must exceed -1");
  }
  double prev = 1.0;
  if (n == 0) return prev;
  double curr = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace radial::specfun
