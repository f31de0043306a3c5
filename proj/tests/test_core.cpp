#include <doctest.h>

#include <numbers>
#include <random>

#include "blipfield/constants.hpp"
#include "blipfield/grid.hpp"
#include "blipfield/spectral.hpp"
#include "oracle_dft.hpp"

using namespace blipfield;

namespace {
constexpr double kPi = std::numbers::pi;

ComplexArray random_array(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  ComplexArray out(n);
  for (int j = 0; j < n; ++j) out[j] = {normal(rng), normal(rng)};
  return out;
}
}  // namespace

TEST_CASE("grid wavenumbers follow the transform ordering") {
  const Grid g = make_grid(8, 8.0);
  CHECK(g.dx() == doctest::Approx(1.0));
  const double expected[8] = {0.0,  kPi / 4, kPi / 2,      3 * kPi / 4,
                              -kPi, -3 * kPi / 4, -kPi / 2, -kPi / 4};
  for (int m = 0; m < 8; ++m) {
    CHECK(g.wavenumbers()[m] == doctest::Approx(expected[m]).epsilon(1e-14));
  }

  const Grid g2 = make_grid(4, 2.0 * kPi);
  const double expected2[4] = {0.0, 1.0, -2.0, -1.0};
  for (int m = 0; m < 4; ++m) {
    CHECK(g2.wavenumbers()[m] == doctest::Approx(expected2[m]).epsilon(1e-14));
  }

  const Grid g3 = make_grid(1024, 64.0);
  CHECK(g3.dk() == doctest::Approx(0.0981747704).epsilon(1e-9));
}

TEST_CASE("grid invariants") {
  const Grid g = make_grid(64, 17.0);
  CHECK(g.dk() * g.dx() * g.n() ==
        doctest::Approx(2.0 * kPi).epsilon(1e-12));
  // exact +-k pairs except k = 0 and Nyquist
  for (int m = 1; m < g.n(); ++m) {
    if (m == g.nyquist_index()) continue;
    CHECK(g.wavenumbers()[g.negative_mode(m)] == -g.wavenumbers()[m]);
  }
  CHECK(g.negative_mode(0) == 0);
  CHECK(g.negative_mode(g.nyquist_index()) == g.nyquist_index());
  CHECK(g.wrap(-1) == g.n() - 1);
  CHECK(g.wrap(g.n()) == 0);

  CHECK_THROWS_AS(make_grid(7, 8.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(2, 8.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(16, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(16, -3.0), std::invalid_argument);
}

TEST_CASE("plane waves concentrate on single modes") {
  const Grid g = make_grid(64, 16.0);
  const double L = g.length();

  SUBCASE("constant array maps to k = 0") {
    ComplexArray constant = ComplexArray::Constant(g.n(), 1.0 / std::sqrt(L));
    const ComplexArray spectrum = to_momentum(g, constant);
    CHECK(std::abs(spectrum[0]) ==
          doctest::Approx(1.0 / std::sqrt(g.dk())).epsilon(1e-12));
    for (int m = 1; m < g.n(); ++m) {
      CHECK(std::abs(spectrum[m]) < 1e-13);
    }
  }

  SUBCASE("e^{i k_1 x} maps to the first mode") {
    const std::complex<double> iunit(0.0, 1.0);
    ComplexArray wave(g.n());
    for (int j = 0; j < g.n(); ++j) {
      wave[j] = std::exp(iunit * g.wavenumbers()[1] * g.positions()[j]) /
                std::sqrt(L);
    }
    const ComplexArray spectrum = to_momentum(g, wave);
    CHECK(std::abs(spectrum[1]) ==
          doctest::Approx(1.0 / std::sqrt(g.dk())).epsilon(1e-12));
    for (int m = 0; m < g.n(); ++m) {
      if (m == 1) continue;
      CHECK(std::abs(spectrum[m]) < 1e-13);
    }
  }

  SUBCASE("unit-norm spectral delta maps to a plane wave of modulus 1/sqrt(L)") {
    ComplexArray spectrum = ComplexArray::Zero(g.n());
    spectrum[5] = 1.0 / std::sqrt(g.dk());
    const ComplexArray wave = from_momentum(g, spectrum);
    for (int j = 0; j < g.n(); ++j) {
      CHECK(std::abs(wave[j]) ==
            doctest::Approx(1.0 / std::sqrt(L)).epsilon(1e-12));
    }
  }
}

TEST_CASE("transforms agree with the quadratic DFT oracle") {
  const Grid g = make_grid(128, 23.0);
  const ComplexArray values = random_array(g.n(), 11);

  const ComplexArray fast = to_momentum(g, values);
  const ComplexArray slow = test_oracle::dft_to_momentum(g, values);
  CHECK((fast - slow).abs().maxCoeff() < 1e-12);

  const ComplexArray back = from_momentum(g, fast);
  const ComplexArray back_slow = test_oracle::dft_from_momentum(g, fast);
  CHECK((back - back_slow).abs().maxCoeff() < 1e-12);
}

TEST_CASE("Parseval and round trip") {
  const Grid g = make_grid(256, 41.5);
  const ComplexArray values = random_array(g.n(), 7);

  const ComplexArray spectrum = to_momentum(g, values);
  const double norm_x = values.abs2().sum() * g.dx();
  const double norm_k = spectrum.abs2().sum() * g.dk();
  CHECK(norm_k == doctest::Approx(norm_x).epsilon(1e-12));

  const ComplexArray back = from_momentum(g, spectrum);
  CHECK((back - values).abs().maxCoeff() < 1e-12);

  SUBCASE("random spectrum round trip") {
    const ComplexArray sk = random_array(g.n(), 8);
    const ComplexArray there_and_back = to_momentum(g, from_momentum(g, sk));
    CHECK((there_and_back - sk).abs().maxCoeff() < 1e-12);
  }

  SUBCASE("length mismatch is rejected") {
    CHECK_THROWS_AS(to_momentum(g, ComplexArray::Zero(g.n() + 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(from_momentum(g, ComplexArray::Zero(g.n() - 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("physical constants") {
  const PhysicalConstants natural = PhysicalConstants::natural();
  CHECK(natural.mu() == 1.0);

  const PhysicalConstants medium(1.0, 2.0, 3.0, 4.0);
  // c = (eps mu)^(-1/2) round trip
  CHECK(1.0 / std::sqrt(medium.epsilon * medium.mu()) ==
        doctest::Approx(medium.c).epsilon(1e-15));

  CHECK_THROWS_AS(PhysicalConstants(0.0, 1.0, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(PhysicalConstants(1.0, -1.0, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(PhysicalConstants(1.0, 1.0, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(PhysicalConstants(1.0, 1.0, 1.0, -2.0),
                  std::invalid_argument);
}
