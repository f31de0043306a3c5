#include "blipfield/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace blipfield {

namespace {

long lattice_shift_sites(const Grid& grid, double t,
                         const PhysicalConstants& constants) {
  const double r = constants.c * t / grid.dx();
  const double rounded = std::round(r);
  if (std::abs(r - rounded) > 1e-9 * std::max(1.0, std::abs(r))) {
    throw std::invalid_argument(
        "shift_evolve: c*t/dx is not an integer; use spectral_evolve");
  }
  return static_cast<long>(rounded);
}

}  // namespace

bool is_lattice_shift(const Grid& grid, double t,
                      const PhysicalConstants& constants) {
  const double r = constants.c * t / grid.dx();
  return std::abs(r - std::round(r)) <= 1e-9 * std::max(1.0, std::abs(r));
}

WavePacket shift_evolve(const WavePacket& packet, double t,
                        const PhysicalConstants& constants) {
  const Grid& grid = packet.grid();
  const long shift = lattice_shift_sites(grid, t, constants);
  WavePacket out(grid);
  for (int ch = 0; ch < 4; ++ch) {
    const long step = direction_sign(channel_direction(ch)) * shift;
    const ComplexArray& in = packet.channel(ch);
    ComplexArray& dst = out.channel(ch);
    for (int j = 0; j < grid.n(); ++j) {
      dst[j] = in[grid.wrap(j - static_cast<int>(step % grid.n()))];
    }
  }
  return out;
}

WavePacket spectral_evolve(const WavePacket& packet, double t,
                           const PhysicalConstants& constants) {
  if (t == 0.0) return packet;  // exact identity, no transform round trip
  const Grid& grid = packet.grid();
  SpectralPacket spectrum = to_momentum(packet);
  const std::complex<double> iunit(0.0, 1.0);
  for (int ch = 0; ch < 4; ++ch) {
    const double sc = direction_sign(channel_direction(ch)) * constants.c;
    spectrum.channels[ch] *= (-iunit * sc * t * grid.wavenumbers()).exp();
  }
  return from_momentum(spectrum);
}

SpectralPacket apply_h_dyn(const SpectralPacket& packet,
                           const PhysicalConstants& constants) {
  SpectralPacket out = packet;
  for (int ch = 0; ch < 4; ++ch) {
    const double sc = direction_sign(channel_direction(ch)) * constants.c;
    out.channels[ch] *= constants.hbar * sc * packet.grid.wavenumbers();
  }
  return out;
}

WavePacket apply_h_dyn(const WavePacket& packet,
                       const PhysicalConstants& constants) {
  return from_momentum(apply_h_dyn(to_momentum(packet), constants));
}

WavePacket apply_h_dyn_stencil(const WavePacket& packet,
                               const PhysicalConstants& constants) {
  const Grid& grid = packet.grid();
  const std::complex<double> iunit(0.0, 1.0);
  WavePacket out(grid);
  for (int ch = 0; ch < 4; ++ch) {
    const double sc = direction_sign(channel_direction(ch)) * constants.c;
    const ComplexArray& in = packet.channel(ch);
    ComplexArray& dst = out.channel(ch);
    for (int j = 0; j < grid.n(); ++j) {
      dst[j] = -iunit * constants.hbar * sc *
               (in[grid.wrap(j + 1)] - in[grid.wrap(j - 1)]) /
               (2.0 * grid.dx());
    }
  }
  return out;
}

double schrodinger_residual(const WavePacket& packet, double t, double dt,
                            const PhysicalConstants& constants) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("schrodinger_residual: dt must be positive");
  }
  const Grid& grid = packet.grid();
  const WavePacket plus = spectral_evolve(packet, t + dt, constants);
  const WavePacket minus = spectral_evolve(packet, t - dt, constants);
  const WavePacket mid = spectral_evolve(packet, t, constants);

  double residual = 0.0;
  for (int ch = 0; ch < 4; ++ch) {
    const double sc = direction_sign(channel_direction(ch)) * constants.c;
    const ComplexArray r =
        (plus.channel(ch) - minus.channel(ch)) / (2.0 * dt) +
        sc * spectral_derivative(grid, mid.channel(ch));
    residual = std::max(residual, r.abs().maxCoeff());
  }
  return residual;
}

EvolutionReport evolve_report(const WavePacket& packet, double t,
                              const PhysicalConstants& constants) {
  EvolutionReport report;
  report.t = t;
  const double norm_before = std::sqrt(packet.norm_squared());
  const WavePacket spectral = spectral_evolve(packet, t, constants);
  report.method = "spectral";
  report.norm_drift = std::abs(std::sqrt(spectral.norm_squared()) -
                               norm_before);
  if (is_lattice_shift(packet.grid(), t, constants)) {
    const WavePacket shifted = shift_evolve(packet, t, constants);
    double dev = 0.0;
    for (int ch = 0; ch < 4; ++ch) {
      dev = std::max(
          dev, (spectral.channel(ch) - shifted.channel(ch)).abs().maxCoeff());
    }
    report.max_deviation = dev;
  }
  return report;
}

}  // namespace blipfield
