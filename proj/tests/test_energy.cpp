#include <doctest.h>

#include <random>

#include "blipfield/dynamics.hpp"
#include "blipfield/energy.hpp"

using namespace blipfield;

namespace {
const PhysicalConstants kNatural = PhysicalConstants::natural();
}

TEST_CASE("monochromatic excitation energy") {
  const Grid grid = make_grid(256, 64.0);
  const int mode = 7;
  const WavePacket p = make_plane_wave(grid, Direction::right,
                                       Polarization::horizontal, mode);
  const EnergyBreakdown breakdown = energy_expectation(p, kNatural);
  const double expected =
      kNatural.hbar * kNatural.c * std::abs(grid.wavenumbers()[mode]);
  CHECK(breakdown.total == doctest::Approx(expected).epsilon(1e-12));

  SUBCASE("per-channel terms sum to the total") {
    double sum = 0.0;
    for (double e : breakdown.per_channel) sum += e;
    CHECK(sum == doctest::Approx(breakdown.total).epsilon(1e-12));
  }

  SUBCASE("scaling c scales the energy") {
    const PhysicalConstants faster(1.0, 3.0, 1.0, 1.0);
    const double scaled = energy_expectation(p, faster).total;
    CHECK(scaled == doctest::Approx(3.0 * expected).epsilon(1e-12));
  }
}

TEST_CASE("narrowband gaussian energy approaches hbar c k0") {
  const Grid grid = make_grid(1024, 64.0);
  const double sigma_k = 0.1;
  const WavePacket p = make_gaussian(grid, Direction::right,
                                     Polarization::horizontal, 0.0,
                                     1.0 / (2.0 * sigma_k), 2.0);
  CHECK(energy_expectation(p, kNatural).total ==
        doctest::Approx(2.0).epsilon(5e-4));
}

TEST_CASE("energy positivity") {
  const Grid grid = make_grid(128, 16.0);

  SUBCASE("zero-mean symmetric packet still carries positive energy") {
    const WavePacket p = make_gaussian(grid, Direction::right,
                                       Polarization::horizontal, 0.0, 1.0,
                                       0.0);
    CHECK(energy_expectation(p, kNatural).total > 0.0);
  }

  SUBCASE("only the k = 0 mode is energy-free") {
    const WavePacket uniform = make_plane_wave(grid, Direction::left,
                                               Polarization::vertical, 0);
    CHECK(energy_expectation(uniform, kNatural).total < 1e-14);
  }

  SUBCASE("random packets") {
    std::mt19937 rng(53);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 10; ++trial) {
      WavePacket p(grid);
      for (int ch = 0; ch < 4; ++ch) {
        for (int j = 0; j < grid.n(); ++j) {
          p.channel(ch)[j] = {normal(rng), normal(rng)};
        }
      }
      CHECK(energy_expectation(normalize(p), kNatural).total >= 0.0);
    }
  }
}

TEST_CASE("classical energy forms") {
  const Grid grid = make_grid(256, 64.0);

  SUBCASE("zero field") {
    CHECK(classical_energy(ClassicalField(grid, kNatural)) == 0.0);
  }

  SUBCASE("constant unit channel on length L") {
    ClassicalField field(grid, kNatural);
    field.channel(Direction::right, Polarization::horizontal) =
        RealArray::Constant(grid.n(), 1.0);
    // A eps c^2 L in natural units
    CHECK(classical_energy(field) ==
          doctest::Approx(grid.length()).epsilon(1e-12));
  }

  SUBCASE("channel form equals the raw E,B form on d'Alembert fields") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    ClassicalField field(grid, kNatural);
    for (int ch = 0; ch < 4; ++ch) {
      for (int mode = 1; mode <= 8; ++mode) {
        const double a = amp(rng);
        const double phase = 3.0 * amp(rng);
        for (int j = 0; j < grid.n(); ++j) {
          field.channels[ch][j] +=
              a * std::cos(grid.dk() * mode * grid.positions()[j] + phase);
        }
      }
    }
    const double channel_form = classical_energy(field);
    const double raw_form = classical_energy_from_totals(field);
    CHECK(raw_form == doctest::Approx(channel_form).epsilon(1e-12));
  }
}

TEST_CASE("energy conservation under evolution") {
  const Grid grid = make_grid(512, 64.0);

  SUBCASE("gaussian packet over 100 sampled times") {
    const WavePacket p = make_gaussian(grid, Direction::right,
                                       Polarization::horizontal, -8.0, 2.0,
                                       2.0);
    std::vector<double> times;
    for (int i = 1; i <= 100; ++i) times.push_back(0.32 * i);
    CHECK(conservation_probe(p, times, kNatural) < 1e-10);
  }

  SUBCASE("monochromatic mode: phase-only evolution") {
    const WavePacket p = make_plane_wave(grid, Direction::left,
                                         Polarization::horizontal, 3);
    CHECK(conservation_probe(p, {0.7, 1.9, 12.0}, kNatural) < 1e-13);
  }

  SUBCASE("two-channel superposition") {
    const WavePacket a = make_gaussian(grid, Direction::right,
                                       Polarization::horizontal, -6.0, 1.0,
                                       1.5);
    const WavePacket b = make_gaussian(grid, Direction::left,
                                       Polarization::vertical, 6.0, 1.0, 2.5);
    const WavePacket p = normalize(a + b);
    std::vector<double> times;
    for (int i = 1; i <= 100; ++i) times.push_back(0.17 * i);
    CHECK(conservation_probe(p, times, kNatural) < 1e-10);
  }

  SUBCASE("zero-energy packet reports absolute drift") {
    const WavePacket uniform = make_plane_wave(grid, Direction::right,
                                               Polarization::horizontal, 0);
    CHECK(conservation_probe(uniform, {1.0}, kNatural) < 1e-14);
  }
}

TEST_CASE("dynamical Hamiltonian and energy observable split signs") {
  const Grid grid = make_grid(256, 64.0);
  const int mode = 5;  // k > 0
  const double k = grid.wavenumbers()[mode];
  REQUIRE(k > 0.0);
  const WavePacket p = make_plane_wave(grid, Direction::left,
                                       Polarization::horizontal, mode);
  const double h_dyn = inner_product(p, apply_h_dyn(p, kNatural)).real();
  const double energy = energy_expectation(p, kNatural).total;
  CHECK(h_dyn == doctest::Approx(-kNatural.hbar * kNatural.c * k)
                     .epsilon(1e-12));
  CHECK(energy == doctest::Approx(kNatural.hbar * kNatural.c * k)
                      .epsilon(1e-12));
}
