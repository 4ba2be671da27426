#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "radial/hyperspherical.hpp"

using namespace radial;
using namespace radial::hyperspherical;
using std::numbers::pi;

namespace {

RadialProfile gaussian() {
  return {[](double r) { return std::exp(-r * r); },
          [](double r) { return -2.0 * r * std::exp(-r * r); },
          [](double r) { return (4.0 * r * r - 2.0) * std::exp(-r * r); }};
}

RadialProfile r_squared() {
  return {[](double r) { return r * r; }, [](double r) { return 2.0 * r; },
          [](double) { return 2.0; }};
}

HyperPoint random_point(std::mt19937_64& rng, int dim, double r_lo, double r_hi) {
  std::uniform_real_distribution<double> radius(r_lo, r_hi);
  std::uniform_real_distribution<double> polar(0.0, pi);
  std::uniform_real_distribution<double> azimuth(0.0, 2.0 * pi);
  HyperPoint p{radius(rng), {}};
  for (int i = 0; i < dim - 2; ++i) p.angles.push_back(polar(rng));
  double phi = azimuth(rng);
  if (phi >= 2.0 * pi) phi = 0.0;
  p.angles.push_back(phi);
  return p;
}

}  // namespace

TEST(ToCartesian, Examples) {
  EXPECT_EQ(to_cartesian({1.0, {0.0, 0.0}}, 3), (std::vector<double>{1.0, 0.0, 0.0}));
  const auto b = to_cartesian({2.0, {pi / 2, 0.0}}, 3);
  EXPECT_NEAR(b[0], 0.0, 1e-15);
  EXPECT_NEAR(b[1], 2.0, 1e-15);
  EXPECT_NEAR(b[2], 0.0, 1e-15);
  const auto c = to_cartesian({1.0, {pi / 2, pi / 2, pi / 2}}, 4);
  EXPECT_NEAR(c[0], 0.0, 1e-15);
  EXPECT_NEAR(c[1], 0.0, 1e-15);
  EXPECT_NEAR(c[2], 0.0, 1e-15);
  EXPECT_NEAR(c[3], 1.0, 1e-15);
}

TEST(ToCartesian, RejectsBadAngles) {
  EXPECT_THROW(to_cartesian({1.0, {0.0}}, 3), DomainError);
  EXPECT_THROW(to_cartesian({1.0, {4.0, 0.0}}, 3), DomainError);
  EXPECT_THROW(to_cartesian({1.0, {0.0, 2.0 * pi}}, 3), DomainError);
  EXPECT_THROW(to_cartesian({-1.0, {0.0, 0.0}}, 3), DomainError);
  EXPECT_THROW(to_cartesian({1.0, {}}, 1), DomainError);
}

TEST(FromCartesian, Examples) {
  const std::vector<double> q{0.0, 0.0, 1.0};
  const auto p = from_cartesian(q);
  EXPECT_DOUBLE_EQ(p.r, 1.0);
  EXPECT_NEAR(p.angles[0], pi / 2, 1e-15);
  EXPECT_NEAR(p.angles[1], pi / 2, 1e-15);

  const std::vector<double> origin(5, 0.0);
  const auto o = from_cartesian(origin);
  EXPECT_EQ(o.r, 0.0);
  EXPECT_EQ(o.angles, std::vector<double>(4, 0.0));
}

TEST(FromCartesian, AxisPointsGetCanonicalZeroAngles) {
  const std::vector<double> q{-3.0, 0.0, 0.0, 0.0};
  const auto p = from_cartesian(q);
  EXPECT_DOUBLE_EQ(p.r, 3.0);
  EXPECT_NEAR(p.angles[0], pi, 1e-15);
  EXPECT_EQ(p.angles[1], 0.0);
  EXPECT_EQ(p.angles[2], 0.0);
}

TEST(Hyperspherical, NormPreservation) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10000; ++i) {
    const int dim = 2 + i % 7;
    const auto p = random_point(rng, dim, 0.0, 10.0);
    const auto q = to_cartesian(p, dim);
    double s = 0.0;
    for (double x : q) s += x * x;
    EXPECT_LE(std::abs(std::sqrt(s) - p.r), 1e-14 * std::max(1.0, p.r));
  }
}

TEST(Hyperspherical, RoundTrips) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 2000; ++i) {
    const int dim = 2 + i % 7;
    const auto p = random_point(rng, dim, 1e-6, 10.0);
    const auto q = to_cartesian(p, dim);
    const auto back = from_cartesian(q);
    const auto q2 = to_cartesian(back, dim);
    for (int j = 0; j < dim; ++j) EXPECT_NEAR(q2[j], q[j], 1e-12 * std::max(1.0, p.r));
    EXPECT_NEAR(back.r, p.r, 1e-12 * std::max(1.0, p.r));
    for (int j = 0; j < dim - 1; ++j) {
      EXPECT_NEAR(back.angles[j], p.angles[j], 1e-9) << "dim=" << dim << " angle " << j;
    }
  }
  for (int i = 0; i < 100; ++i) {
    const int dim = 2 + i % 7;
    std::normal_distribution<double> gauss(0.0, 3.0);
    std::vector<double> q(static_cast<std::size_t>(dim));
    for (double& x : q) x = gauss(rng);
    const auto q2 = to_cartesian(from_cartesian(q), dim);
    for (int j = 0; j < dim; ++j) EXPECT_NEAR(q2[j], q[j], 1e-12 * 10.0);
  }
}

TEST(AngularEigenvalue, Examples) {
  EXPECT_EQ(angular_eigenvalue(0, 7), 0);
  EXPECT_EQ(angular_eigenvalue(1, 2), 2);
  EXPECT_EQ(angular_eigenvalue(2, 3), 8);
  EXPECT_THROW(angular_eigenvalue(-1, 2), DomainError);
  EXPECT_THROW(angular_eigenvalue(1, 0), DomainError);
}

TEST(LaplacianConsistency, Examples) {
  EXPECT_LE(laplacian_consistency(gaussian(), 0, 3, 1e-3), 1e-4);
  EXPECT_LE(laplacian_consistency(gaussian(), 1, 4, 1e-3), 1e-4);
  EXPECT_LE(laplacian_consistency(r_squared(), 0, 3, 1e-2), 1e-9);
}

TEST(LaplacianConsistency, RejectsLargeStepAndUnsupportedL) {
  EXPECT_THROW(laplacian_consistency(gaussian(), 0, 3, 0.2), DomainError);
  EXPECT_THROW(laplacian_consistency(gaussian(), 3, 3, 1e-3), DomainError);
}

TEST(LaplacianConsistency, SecondOrderInStep) {
  for (int dim : {3, 4}) {
    for (int l = 0; l <= 2; ++l) {
      const double coarse = laplacian_consistency(gaussian(), l, dim, 0.02);
      const double fine = laplacian_consistency(gaussian(), l, dim, 0.01);
      const double ratio = coarse / fine;
      EXPECT_GE(ratio, 3.5) << "N=" << dim << " l=" << l;
      EXPECT_LE(ratio, 4.5) << "N=" << dim << " l=" << l;
    }
  }
}

TEST(LaplacianConsistency, OnlyTheLadderEigenvalueClosesTheDecomposition) {
  for (int dim : {3, 4}) {
    for (int l = 1; l <= 2; ++l) {
      const double exact = static_cast<double>(angular_eigenvalue(l, dim - 1));
      const double right = laplacian_consistency(gaussian(), l, dim, 0.01, exact);
      EXPECT_LT(right, 1e-3);
      for (double shift : {-1.0, 1.0}) {
        EXPECT_GT(laplacian_consistency(gaussian(), l, dim, 0.01, exact + shift), 100.0 * right)
            << "N=" << dim << " l=" << l << " shift=" << shift;
      }
      // The neighbouring sphere's eigenvalue is wrong too.
      const double other = static_cast<double>(angular_eigenvalue(l, dim));
      EXPECT_GT(laplacian_consistency(gaussian(), l, dim, 0.01, other), 100.0 * right);
    }
  }
}
