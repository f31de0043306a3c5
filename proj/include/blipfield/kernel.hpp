#pragma once

#include "blipfield/constants.hpp"
#include "blipfield/wavepacket.hpp"

namespace blipfield {

// Non-local regularisation kernel linking site excitations to the field
// observables.  Defined in momentum space as
//
//   R~(k) = sqrt(hbar |k| / (area * epsilon * pi * c)),   R~(0) = 0,
//
// and realised on the lattice only through the band-limited inverse
// transform; position_values()[j] is R(x_j) on [-L/2, L/2).  The on-site
// value is whatever the band-limited transform yields.
class Kernel {
 public:
  Kernel(Grid grid, PhysicalConstants constants);

  const Grid& grid() const { return grid_; }
  const PhysicalConstants& constants() const { return constants_; }
  const RealArray& fourier_values() const { return fourier_values_; }
  const RealArray& position_values() const { return position_values_; }

 private:
  Grid grid_;
  PhysicalConstants constants_;
  RealArray fourier_values_;
  RealArray position_values_;
};

Kernel build_kernel(const Grid& grid, const PhysicalConstants& constants);

// Circular convolution with the kernel, (R psi)(x) = sum_j' dx R(x - x_j')
// psi(x_j'), applied channel by channel.  Realised as multiplication by
// sqrt(2 pi) R~(k) in momentum space; commutes with lattice transport.
WavePacket regularize(const Kernel& kernel, const WavePacket& packet);

// Least-squares power-law exponent of |values| against separation from
// center_site, over separations [min_separation, max_separation].  Samples
// are averaged over adjacent sites (the band-limited tables carry an
// alternating Nyquist component) and log-binned so every scale gets equal
// weight.
double fit_tail_exponent(const RealArray& values, const Grid& grid,
                         int center_site, double min_separation,
                         double max_separation, int n_bins = 12);

// Default far-zone fit window [16 dx, L/16]: twice the lattice exclusion on
// the near side, and a quarter of the wrap-around exclusion L/4 on the far
// side because the periodic images of a 3/2-power tail decay slowly.
double tail_fit_min_separation(const Grid& grid);
double tail_fit_max_separation(const Grid& grid);

}  // namespace blipfield
