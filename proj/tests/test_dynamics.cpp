#include <doctest.h>

#include <random>

#include "blipfield/dynamics.hpp"

using namespace blipfield;

namespace {

const PhysicalConstants kNatural = PhysicalConstants::natural();

double max_difference(const WavePacket& a, const WavePacket& b) {
  double diff = 0.0;
  for (int ch = 0; ch < 4; ++ch) {
    diff = std::max(diff, (a.channel(ch) - b.channel(ch)).abs().maxCoeff());
  }
  return diff;
}

}  // namespace

TEST_CASE("lattice transport") {
  const Grid grid = make_grid(64, 8.0);

  SUBCASE("a right-moving excitation shifts right by c*t/dx sites") {
    const WavePacket blip = make_blip(grid, Direction::right,
                                      Polarization::horizontal, 10);
    const double t = 5.0 * grid.dx() / kNatural.c;
    const WavePacket moved = shift_evolve(blip, t, kNatural);
    CHECK(detection_probability(moved, Direction::right,
                                Polarization::horizontal, 15) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("a left-moving excitation shifts left") {
    const WavePacket blip = make_blip(grid, Direction::left,
                                      Polarization::vertical, 10);
    const double t = 3.0 * grid.dx() / kNatural.c;
    const WavePacket moved = shift_evolve(blip, t, kNatural);
    CHECK(detection_probability(moved, Direction::left,
                                Polarization::vertical, 7) ==
          doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("t = 0 is the identity") {
    const WavePacket p = make_gaussian(grid, Direction::right,
                                       Polarization::horizontal, 0.0, 0.5,
                                       1.0);
    CHECK(max_difference(shift_evolve(p, 0.0, kNatural), p) == 0.0);
    CHECK(max_difference(spectral_evolve(p, 0.0, kNatural), p) < 1e-14);
  }

  SUBCASE("fractional shifts are rejected") {
    const WavePacket p = make_blip(grid, Direction::right,
                                   Polarization::horizontal, 0);
    CHECK_THROWS_AS(shift_evolve(p, 0.4 * grid.dx(), kNatural),
                    std::invalid_argument);
    CHECK(is_lattice_shift(grid, grid.dx(), kNatural));
    CHECK_FALSE(is_lattice_shift(grid, 0.4 * grid.dx(), kNatural));
  }

  SUBCASE("group property") {
    const WavePacket p = make_gaussian(grid, Direction::right,
                                       Polarization::horizontal, -2.0, 0.5,
                                       3.0);
    const double t1 = 4.0 * grid.dx(), t2 = 9.0 * grid.dx();
    CHECK(max_difference(shift_evolve(shift_evolve(p, t1, kNatural), t2,
                                      kNatural),
                         shift_evolve(p, t1 + t2, kNatural)) == 0.0);
    CHECK(max_difference(
              spectral_evolve(spectral_evolve(p, 0.37, kNatural), 1.21,
                              kNatural),
              spectral_evolve(p, 0.37 + 1.21, kNatural)) < 1e-10);
  }
}

TEST_CASE("spectral evolution matches the exact shift") {
  const Grid grid = make_grid(1024, 64.0);
  const WavePacket p = make_gaussian(grid, Direction::right,
                                     Polarization::horizontal, -16.0, 1.0,
                                     0.0);
  const double t = 64.0 * grid.dx() / kNatural.c;
  CHECK(max_difference(spectral_evolve(p, t, kNatural),
                       shift_evolve(p, t, kNatural)) < 1e-10);

  SUBCASE("variance is unchanged by evolution") {
    const double reference = packet_moments(p).variance;
    const WavePacket later = spectral_evolve(p, 7.3, kNatural);
    CHECK(std::abs(packet_moments(later).variance - reference) /
              reference < 1e-9);
  }

  SUBCASE("norm drift stays below 1e-10 over 100 steps") {
    WavePacket q = p;
    double drift = 0.0;
    for (int step = 0; step < 100; ++step) {
      q = spectral_evolve(q, 0.11, kNatural);
      drift = std::max(drift, std::abs(std::sqrt(q.norm_squared()) - 1.0));
    }
    CHECK(drift < 1e-10);
  }

  SUBCASE("counter-propagating packets stay orthogonal through overlap") {
    const double a = 8.0;
    const WavePacket right = make_gaussian(grid, Direction::right,
                                           Polarization::horizontal, -a, 1.0,
                                           0.0);
    const WavePacket left = make_gaussian(grid, Direction::left,
                                          Polarization::horizontal, a, 1.0,
                                          0.0);
    const WavePacket right_mid = spectral_evolve(right, a / kNatural.c,
                                                 kNatural);
    const WavePacket left_mid = spectral_evolve(left, a / kNatural.c,
                                                kNatural);
    // both packets are now centered at the origin
    CHECK(std::abs(packet_moments(right_mid).mean) < 1e-9);
    CHECK(std::abs(packet_moments(left_mid).mean) < 1e-9);
    CHECK(std::abs(inner_product(right_mid, left_mid)) < 1e-12);
  }
}

TEST_CASE("generator of the dynamics") {
  const Grid grid = make_grid(256, 64.0);

  SUBCASE("plane waves are eigenvectors with eigenvalue hbar*s*c*k") {
    for (Direction s : kDirections) {
      const int mode = 9;
      const WavePacket p = make_plane_wave(grid, s, Polarization::horizontal,
                                           mode);
      const WavePacket hp = apply_h_dyn(p, kNatural);
      const double expected = kNatural.hbar * direction_sign(s) * kNatural.c *
                              grid.wavenumbers()[mode];
      const std::complex<double> eigenvalue = inner_product(p, hp);
      CHECK(eigenvalue.real() == doctest::Approx(expected).epsilon(1e-12));
      // eigenvector: H p = lambda p
      WavePacket residual = hp + std::complex<double>(-expected, 0.0) * p;
      CHECK(residual.norm_squared() < 1e-24);
    }
  }

  SUBCASE("expectation value is real for a random packet") {
    std::mt19937 rng(31);
    std::normal_distribution<double> normal;
    WavePacket p(grid);
    for (int ch = 0; ch < 4; ++ch) {
      for (int j = 0; j < grid.n(); ++j) {
        p.channel(ch)[j] = {normal(rng), normal(rng)};
      }
    }
    p = normalize(p);
    const std::complex<double> expectation =
        inner_product(p, apply_h_dyn(p, kNatural));
    CHECK(std::abs(expectation.imag()) < 1e-12 * std::abs(expectation.real()) +
                                             1e-14);
  }

  SUBCASE("the stencil diagnostic converges to the spectral generator") {
    auto stencil_error = [&](int n) {
      const Grid g = make_grid(n, 64.0);
      const WavePacket p = make_gaussian(g, Direction::right,
                                         Polarization::horizontal, 0.0, 2.0,
                                         1.0);
      const WavePacket spectral = apply_h_dyn(p, kNatural);
      const WavePacket stencil = apply_h_dyn_stencil(p, kNatural);
      return max_difference(spectral, stencil);
    };
    CHECK(stencil_error(256) / stencil_error(512) ==
          doctest::Approx(4.0).epsilon(0.1));
  }

  SUBCASE("left movers take the negated right-mover eigenvalue") {
    const int mode = 4;
    const WavePacket right = make_plane_wave(grid, Direction::right,
                                             Polarization::vertical, mode);
    const WavePacket left = make_plane_wave(grid, Direction::left,
                                            Polarization::vertical, mode);
    const double ev_right =
        inner_product(right, apply_h_dyn(right, kNatural)).real();
    const double ev_left =
        inner_product(left, apply_h_dyn(left, kNatural)).real();
    CHECK(ev_left == doctest::Approx(-ev_right).epsilon(1e-12));
  }
}

TEST_CASE("equation-of-motion residual") {
  const Grid grid = make_grid(512, 64.0);
  const WavePacket p = make_gaussian(grid, Direction::right,
                                     Polarization::horizontal, 0.0, 2.0, 1.0);

  SUBCASE("halving dt divides the residual by about four") {
    const double dt = 0.02;
    const double coarse = schrodinger_residual(p, 0.5, dt, kNatural);
    const double fine = schrodinger_residual(p, 0.5, dt / 2.0, kNatural);
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.2));
  }

  SUBCASE("an exact eigenmode has a tiny residual") {
    const Grid wide = make_grid(2048, 2048.0);
    const WavePacket wave = make_plane_wave(wide, Direction::right,
                                            Polarization::horizontal, 1);
    const double dt = wide.dx() / (10.0 * kNatural.c);
    CHECK(schrodinger_residual(wave, 0.0, dt, kNatural) < 1e-10);
  }

  SUBCASE("the zero packet has zero residual") {
    CHECK(schrodinger_residual(WavePacket(grid), 0.0, 0.1, kNatural) == 0.0);
  }

  SUBCASE("first-order generator step matches spectral evolution to O(dt^2)") {
    auto euler_error = [&](double dt) {
      const WavePacket hp = apply_h_dyn(p, kNatural);
      const std::complex<double> factor(0.0, -dt / kNatural.hbar);
      const WavePacket euler = p + factor * hp;
      return max_difference(spectral_evolve(p, dt, kNatural), euler);
    };
    const double e1 = euler_error(0.02);
    const double e2 = euler_error(0.01);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.2));
  }
}

TEST_CASE("evolution report") {
  const Grid grid = make_grid(128, 16.0);
  const WavePacket p = make_gaussian(grid, Direction::right,
                                     Polarization::horizontal, 0.0, 0.5, 0.0);
  const EvolutionReport report = evolve_report(p, 8.0 * grid.dx(), kNatural);
  CHECK(report.method == "spectral");
  CHECK(report.norm_drift < 1e-12);
  CHECK(report.max_deviation < 1e-10);  // lattice shift comparison ran
}
