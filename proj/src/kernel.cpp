#include "blipfield/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace blipfield {

Kernel::Kernel(Grid grid, PhysicalConstants constants)
    : grid_(std::move(grid)), constants_(constants) {
  const double scale =
      constants_.hbar /
      (constants_.area * constants_.epsilon * std::numbers::pi * constants_.c);
  fourier_values_ = (scale * grid_.wavenumbers().abs()).sqrt();

  ComplexArray complex_table =
      from_momentum(grid_, fourier_values_.cast<std::complex<double>>());
  // R~ is real and even on the lattice, so the table is real up to rounding.
  position_values_ = complex_table.real();
}

Kernel build_kernel(const Grid& grid, const PhysicalConstants& constants) {
  return Kernel(grid, constants);
}

WavePacket regularize(const Kernel& kernel, const WavePacket& packet) {
  if (packet.grid() != kernel.grid()) {
    throw std::invalid_argument("regularize: packet grid differs from kernel");
  }
  const Grid& grid = kernel.grid();
  // True convolution integral dx' R(x-x') psi(x'); in the unitary transform
  // convention the transfer gain is sqrt(2 pi) R~(k).
  const double gain = std::sqrt(2.0 * std::numbers::pi);
  WavePacket out(grid);
  for (int ch = 0; ch < 4; ++ch) {
    ComplexArray spectrum = to_momentum(grid, packet.channel(ch));
    spectrum *= kernel.fourier_values();
    out.channel(ch) = gain * from_momentum(grid, spectrum);
  }
  return out;
}

double fit_tail_exponent(const RealArray& values, const Grid& grid,
                         int center_site, double min_separation,
                         double max_separation, int n_bins) {
  if (values.size() != grid.n()) {
    throw std::invalid_argument("fit_tail_exponent: array/grid mismatch");
  }
  if (!(min_separation > 0.0) || !(max_separation > min_separation)) {
    throw std::invalid_argument("fit_tail_exponent: bad separation window");
  }
  const int n = grid.n();
  const double dx = grid.dx();

  // One sample per site separation j*dx, averaged over the two sides of the
  // center and over adjacent sites to suppress the alternating Nyquist
  // component of band-limited tables.
  const int j_min = std::max(1, static_cast<int>(std::ceil(min_separation / dx)));
  const int j_max =
      std::min(n / 2 - 2, static_cast<int>(std::floor(max_separation / dx)));
  if (j_max - j_min < 3) {
    throw std::invalid_argument("fit_tail_exponent: window too narrow");
  }

  auto magnitude = [&](int j) {
    const double right = 0.5 * (std::abs(values[grid.wrap(center_site + j)]) +
                                std::abs(values[grid.wrap(center_site + j + 1)]));
    const double left = 0.5 * (std::abs(values[grid.wrap(center_site - j)]) +
                               std::abs(values[grid.wrap(center_site - j - 1)]));
    return 0.5 * (right + left);
  };

  // Log-binned means so each scale carries equal weight in the fit.
  const double log_lo = std::log(j_min * dx);
  const double log_hi = std::log((j_max + 0.5) * dx);
  std::vector<double> bin_x(n_bins, 0.0), bin_y(n_bins, 0.0);
  std::vector<int> bin_count(n_bins, 0);
  for (int j = j_min; j <= j_max; ++j) {
    const double lx = std::log(j * dx);
    int b = static_cast<int>(n_bins * (lx - log_lo) / (log_hi - log_lo));
    b = std::min(std::max(b, 0), n_bins - 1);
    const double mag = magnitude(j);
    if (!(mag > 0.0)) continue;
    bin_x[b] += lx;
    bin_y[b] += std::log(mag);
    ++bin_count[b];
  }

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (int b = 0; b < n_bins; ++b) {
    if (bin_count[b] == 0) continue;
    const double bx = bin_x[b] / bin_count[b];
    const double by = bin_y[b] / bin_count[b];
    sx += bx;
    sy += by;
    sxx += bx * bx;
    sxy += bx * by;
    ++m;
  }
  if (m < 3) {
    throw std::invalid_argument("fit_tail_exponent: too few populated bins");
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double tail_fit_min_separation(const Grid& grid) { return 16.0 * grid.dx(); }

double tail_fit_max_separation(const Grid& grid) {
  return grid.length() / 16.0;
}

}  // namespace blipfield
