#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "radial/analytic.hpp"
#include "radial/quadrature.hpp"
#include "reference.hpp"

using namespace radial;
using std::numbers::pi;

namespace {

const std::vector<PotentialSpec> kClosedForm = {InfiniteWell{1.0}, Harmonic{1.0}, Coulomb{1.0}};

}  // namespace

TEST(BoxEnergy, Examples) {
  EXPECT_NEAR(analytic::box_energy(1.0, 3, 0, 0), pi * pi / 2, 1e-12);
  EXPECT_NEAR(analytic::box_energy(1.0, 3, 0, 1), 2 * pi * pi, 1e-11);
  // j_{3/2,1}^2 / 2 with j_{3/2,1} = 4.493409457909064.
  EXPECT_NEAR(analytic::box_energy(1.0, 5, 0, 0), 10.0953642782133, 1e-11);
}

TEST(BoxEnergy, ScalesWithRadius) {
  EXPECT_NEAR(analytic::box_energy(2.0, 3, 0, 0), pi * pi / 8, 1e-12);
}

TEST(BoxWavefunction, Examples) {
  const auto st = analytic::box_wavefunction(1.0, 3, 0, 0, {0.5, 1.0 - 1e-12, 1.0});
  EXPECT_NEAR(st.fn.values()[0], 2.0 * std::sqrt(2.0 / pi), 1e-13);
  EXPECT_NEAR(st.fn.values()[1], 0.0, 1e-9);
  EXPECT_EQ(st.fn.values()[2], 0.0);
  EXPECT_THROW(analytic::box_wavefunction(1.0, 3, 0, 0, {0.5, 1.1}), DomainError);
}

TEST(BoxWavefunction, PartnersDifferByPowerOfR) {
  const auto grid = analytic::uniform_grid(0.01, 0.99, 300);
  const auto five = analytic::box_wavefunction(1.0, 5, 0, 0, grid);
  const auto three = analytic::box_wavefunction(1.0, 3, 1, 0, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_NEAR(three.fn.values()[i], grid[i] * five.fn.values()[i],
                1e-14 * std::abs(three.fn.values()[i]) + 1e-300);
  }
}

TEST(OscillatorEnergy, Examples) {
  EXPECT_EQ(analytic::oscillator_energy(1.0, 3, 0, 0), 1.5);
  EXPECT_EQ(analytic::oscillator_energy(1.0, 2, 0, 0), 1.0);
  EXPECT_EQ(analytic::oscillator_energy(1.0, 9, 0, 0), 4.5);
}

TEST(OscillatorEnergy, SpacingIsTwoOmega) {
  for (double omega : {0.5, 1.0, 2.0, 4.0}) {
    for (int dim = 2; dim <= 10; ++dim) {
      for (int l = 0; l <= 3; ++l) {
        for (int n = 0; n < 6; ++n) {
          EXPECT_EQ(analytic::oscillator_energy(omega, dim, l, n + 1) -
                        analytic::oscillator_energy(omega, dim, l, n),
                    2.0 * omega);
        }
      }
    }
  }
}

TEST(OscillatorWavefunction, Examples) {
  EXPECT_NEAR(analytic::oscillator_wavefunction(1.0, 3, 0, 0, {1.0}).fn.values()[0],
              std::exp(-0.5), 1e-15);
  EXPECT_NEAR(analytic::oscillator_wavefunction(1.0, 3, 0, 1, {std::sqrt(1.5)}).fn.values()[0],
              0.0, 1e-15);
  EXPECT_NEAR(analytic::oscillator_wavefunction(1.0, 4, 1, 0, {2.0}).fn.values()[0],
              2.0 * std::exp(-2.0), 1e-15);
}

TEST(CoulombEnergy, Examples) {
  EXPECT_EQ(analytic::coulomb_energy(1.0, 3, 0, 0), -0.5);
  EXPECT_EQ(analytic::coulomb_energy(1.0, 3, 0, 1), -0.125);
  EXPECT_NEAR(analytic::coulomb_energy(1.0, 4, 0, 0), -2.0 / 9.0, 1e-16);
}

TEST(CoulombEnergy, DependsOnlyOnPrincipalNumber) {
  EXPECT_EQ(analytic::coulomb_energy(1.0, 3, 0, 1), analytic::coulomb_energy(1.0, 3, 1, 0));
  EXPECT_EQ(analytic::coulomb_energy(1.0, 3, 0, 2), analytic::coulomb_energy(1.0, 3, 2, 0));
  EXPECT_EQ(analytic::coulomb_energy(1.0, 4, 0, 1), analytic::coulomb_energy(1.0, 4, 1, 0));
}

TEST(CoulombWavefunction, Examples) {
  EXPECT_NEAR(analytic::coulomb_wavefunction(1.0, 3, 0, 0, {1.0}).fn.values()[0], std::exp(-1.0),
              1e-15);
  EXPECT_NEAR(analytic::coulomb_wavefunction(1.0, 3, 0, 1, {2.0}).fn.values()[0], 0.0, 1e-15);
  const auto st = analytic::coulomb_wavefunction(1.0, 3, 0, 1, {1.9, 2.1});
  EXPECT_GT(st.fn.values()[0] * 1.0, 0.0);
  EXPECT_LT(st.fn.values()[1], 0.0);
}

TEST(CoulombWavefunction, PartnersShareReducedFunction) {
  const auto grid = analytic::uniform_grid(0.01, 20.0, 400);
  const auto five = analytic::coulomb_wavefunction(1.0, 5, 0, 0, grid);
  const auto three = analytic::coulomb_wavefunction(1.0, 3, 1, 0, grid);
  const auto psi5 = reduced_wavefunction(five.fn, HalfInteger::from_int(2));
  const auto psi3 = reduced_wavefunction(three.fn, HalfInteger::from_int(1));
  const auto a = reference::max_normalized(psi5.values());
  const auto b = reference::max_normalized(psi3.values());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-14);
}

TEST(Analytic, EnergiesDependOnlyOnK) {
  for (int twice = 1; twice <= 12; ++twice) {
    const auto partners = equivalent_problems(HalfInteger::from_twice(twice), 2 * twice + 1);
    for (const auto& spec : kClosedForm) {
      for (int n_r = 0; n_r <= 4; ++n_r) {
        const double ref = analytic::energy({partners.front().dim, partners.front().l, spec}, n_r);
        for (const auto& p : partners) {
          EXPECT_EQ(analytic::energy({p.dim, p.l, spec}, n_r), ref)
              << potential_name(spec) << " N=" << p.dim << " l=" << p.l;
        }
      }
    }
  }
}

TEST(Analytic, EnergiesIncreaseWithRadialNumber) {
  for (const auto& spec : kClosedForm) {
    for (int dim = 2; dim <= 8; ++dim) {
      const auto table = analytic::spectrum({dim, 1, spec}, 6);
      for (std::size_t i = 1; i < table.entries.size(); ++i) {
        EXPECT_LT(table.entries[i - 1].energy, table.entries[i].energy);
        EXPECT_EQ(table.entries[i].n_r, static_cast<int>(i));
      }
    }
  }
}

TEST(Analytic, RejectsOutOfEnvelopeInput) {
  EXPECT_THROW(analytic::oscillator_energy(1.0, 3, 30, 0), RangeError);
  EXPECT_NO_THROW(analytic::oscillator_energy(1.0, 3, 29, 0));
  EXPECT_THROW(analytic::box_energy(1.0, 3, 0, -1), DomainError);
  EXPECT_THROW(analytic::coulomb_energy(-1.0, 3, 0, 0), DomainError);
  EXPECT_THROW(analytic::energy({3, 0, PowerSeries{{{1.0, 4.0}}}}, 0), ContractError);
}

TEST(Analytic, NodeCountsEqualRadialNumber) {
  for (const auto& spec : kClosedForm) {
    for (int dim = 2; dim <= 8; ++dim) {
      for (int l = 0; l <= 2; ++l) {
        for (int n_r = 0; n_r <= 4; ++n_r) {
          const auto st = analytic::normalized_state({dim, l, spec}, n_r, 2000);
          EXPECT_EQ(analytic::count_nodes(st.fn), n_r)
              << potential_name(spec) << " N=" << dim << " l=" << l << " n_r=" << n_r;
        }
      }
    }
  }
}

TEST(Normalize, UnitNormAndPositiveNearOrigin) {
  for (const auto& spec : kClosedForm) {
    for (int dim : {2, 3, 6}) {
      for (int n_r = 0; n_r <= 3; ++n_r) {
        const RadialProblem problem{dim, 1, spec};
        const auto st = analytic::normalized_state(problem, n_r);
        EXPECT_EQ(st.norm_status, NormStatus::normalized);
        EXPECT_GT(st.fn.values().front(), 0.0);
        // Re-integrate on a grid ten times finer as an independent check.
        const auto K = reduce(problem).K;
        const double r_max = analytic::default_r_max(spec, K, n_r);
        const auto fine = analytic::uniform_grid(r_max * 1e-6, r_max, 40001);
        const auto raw = analytic::state(problem, n_r, fine);
        const double scale = st.fn.values()[0] /
                             analytic::state(problem, n_r, {st.fn.grid()[0]}).fn.values()[0];
        std::vector<double> f(fine.size());
        for (std::size_t i = 0; i < fine.size(); ++i) {
          const double v = scale * raw.fn.values()[i];
          f[i] = v * v * std::pow(fine[i], dim - 1);
        }
        EXPECT_NEAR(simpson(fine, f), 1.0, 1e-8) << potential_name(spec) << " N=" << dim;
      }
    }
  }
}

TEST(Normalize, ClosedFormConstants) {
  // HO ground state N=3: R = 2 pi^{-1/4} exp(-r^2/2).
  const auto ho = analytic::normalized_state({3, 0, Harmonic{1.0}}, 0);
  const double c_ho = 2.0 / std::pow(pi, 0.25);
  for (std::size_t i = 0; i < ho.fn.size(); i += 397) {
    const double r = ho.fn.grid()[i];
    EXPECT_NEAR(ho.fn.values()[i], c_ho * std::exp(-0.5 * r * r), 1e-9);
  }
  // Hydrogen ground state: int 4 e^{-2r} r^2 dr = 1, so R = 2 e^{-r}. The
  // default grid stops at r = 6 and drops ~5e-4 of the norm, hence r = 30.
  const auto h = analytic::normalize(
      analytic::state({3, 0, Coulomb{1.0}}, 0, analytic::uniform_grid(1e-3, 30.0, 20001)), 3);
  for (std::size_t i = 0; i < h.fn.size(); i += 397) {
    EXPECT_NEAR(h.fn.values()[i], 2.0 * std::exp(-h.fn.grid()[i]), 1e-9);
  }
  // Box ground state N=3, a=1: R = sqrt(2) sin(pi r) / r, integrated on (0, a) only.
  const auto box = analytic::normalized_state({3, 0, InfiniteWell{1.0}}, 0);
  for (std::size_t i = 0; i + 1 < box.fn.size(); i += 397) {
    const double r = box.fn.grid()[i];
    EXPECT_NEAR(box.fn.values()[i], std::sqrt(2.0) * std::sin(pi * r) / r, 1e-8);
  }
}

TEST(Normalize, RejectsDivergingTail) {
  const auto grid = analytic::uniform_grid(0.01, 30.0, 2000);
  std::vector<double> values;
  for (double r : grid) values.push_back(std::exp(-r) + 1e-6 * std::exp(r));
  Eigenstate st{0, 0.0, RadialFunction(grid, values, Representation::R_full), NormStatus::raw,
                Provenance::analytic};
  EXPECT_THROW(analytic::normalize(st, 3), NumericalError);
}

TEST(Normalize, RequiresFullRepresentation) {
  Eigenstate st{0, 0.0, RadialFunction({1, 2, 3}, {1, 1, 1}, Representation::psi_K),
                NormStatus::raw, Provenance::analytic};
  EXPECT_THROW(analytic::normalize(st, 3), ContractError);
}

TEST(Analytic, Orthogonality) {
  for (const auto& spec : kClosedForm) {
    for (int dim : {2, 3, 5}) {
      for (int l = 0; l <= 1; ++l) {
        const RadialProblem problem{dim, l, spec};
        const auto grid = analytic::default_grid(spec, reduce(problem).K, 3);
        std::vector<Eigenstate> states;
        for (int n_r = 0; n_r <= 3; ++n_r) {
          states.push_back(analytic::normalize(analytic::state(problem, n_r, grid), dim));
        }
        for (int i = 0; i <= 3; ++i) {
          for (int j = i + 1; j <= 3; ++j) {
            EXPECT_LE(std::abs(analytic::overlap(states[i], states[j], dim)), 1e-6)
                << potential_name(spec) << " N=" << dim << " l=" << l << " " << i << "," << j;
          }
        }
      }
    }
  }
}

TEST(Analytic, LeadingPowerNearOrigin) {
  for (const auto& spec : kClosedForm) {
    for (int dim : {2, 3, 4, 7}) {
      for (int l = 0; l <= 2; ++l) {
        for (int n_r = 0; n_r <= 2; ++n_r) {
          const auto st = analytic::normalized_state({dim, l, spec}, n_r);
          double c[3];
          for (int i = 0; i < 3; ++i) c[i] = st.fn.values()[i] / std::pow(st.fn.grid()[i], l);
          EXPECT_GT(std::abs(c[0]), 0.0);
          // Coulomb's cusp gives R / r^l a linear correction in r.
          EXPECT_LT(std::abs(c[1] / c[0] - 1.0), 0.05);
          EXPECT_LT(std::abs(c[2] / c[0] - 1.0), 0.05);
        }
      }
    }
  }
}

TEST(Analytic, LiftedPartnersAgreeForEveryPotential) {
  for (const auto& spec : kClosedForm) {
    const auto grid = analytic::default_grid(spec, HalfInteger::from_int(2), 0, 2000);
    const auto three = analytic::state({3, 1, spec}, 0, grid);
    const auto five = analytic::state({5, 0, spec}, 0, grid);
    std::vector<double> ratio(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) ratio[i] = three.fn.values()[i] / grid[i];
    const auto a = reference::max_normalized(ratio);
    const auto b = reference::max_normalized(five.fn.values());
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-8);
  }
}

TEST(Grid, UniformGridEndpoints) {
  const auto g = analytic::uniform_grid(0.1, 1.0, 10);
  EXPECT_EQ(g.front(), 0.1);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_THROW(analytic::uniform_grid(0.0, 1.0, 10), DomainError);
}
