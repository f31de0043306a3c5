#pragma once

// Test-only quadratic-time reference for the spectral transforms; kept
// independent of the FFT-backed production path.

#include <cmath>
#include <complex>
#include <numbers>

#include "blipfield/grid.hpp"
#include "blipfield/spectral.hpp"

namespace test_oracle {

inline blipfield::ComplexArray dft_to_momentum(
    const blipfield::Grid& grid, const blipfield::ComplexArray& values) {
  const std::complex<double> iunit(0.0, 1.0);
  blipfield::ComplexArray out(grid.n());
  for (int m = 0; m < grid.n(); ++m) {
    std::complex<double> sum = 0.0;
    for (int j = 0; j < grid.n(); ++j) {
      sum += std::exp(-iunit * grid.wavenumbers()[m] * grid.positions()[j]) *
             values[j];
    }
    out[m] = grid.dx() / std::sqrt(2.0 * std::numbers::pi) * sum;
  }
  return out;
}

inline blipfield::ComplexArray dft_from_momentum(
    const blipfield::Grid& grid, const blipfield::ComplexArray& values) {
  const std::complex<double> iunit(0.0, 1.0);
  blipfield::ComplexArray out(grid.n());
  for (int j = 0; j < grid.n(); ++j) {
    std::complex<double> sum = 0.0;
    for (int m = 0; m < grid.n(); ++m) {
      sum += std::exp(iunit * grid.wavenumbers()[m] * grid.positions()[j]) *
             values[m];
    }
    out[j] = grid.dk() / std::sqrt(2.0 * std::numbers::pi) * sum;
  }
  return out;
}

}  // namespace test_oracle
