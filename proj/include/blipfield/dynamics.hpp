#pragma once

#include <string>

#include "blipfield/constants.hpp"
#include "blipfield/wavepacket.hpp"

namespace blipfield {

struct EvolutionReport {
  std::string method;
  double t = 0.0;
  double norm_drift = 0.0;
  // Max |amplitude difference| against the other evolution method, when both
  // are defined for this t; 0 otherwise.
  double max_deviation = 0.0;
};

// Exact lattice transport: channel (s,lambda) circularly shifted by
// s*c*t/dx sites.  Requires c*t/dx to be an integer; fractional shifts must
// go through spectral_evolve.
WavePacket shift_evolve(const WavePacket& packet, double t,
                        const PhysicalConstants& constants);

// Phase evolution psit <- e^{-i s c k t} psit, defined for any real t and
// exactly unitary.
WavePacket spectral_evolve(const WavePacket& packet, double t,
                           const PhysicalConstants& constants);

bool is_lattice_shift(const Grid& grid, double t,
                      const PhysicalConstants& constants);

// Generator of the evolution: per channel -i hbar s c d/dx with the spectral
// derivative, i.e. multiplication by hbar*s*c*k in momentum space.
WavePacket apply_h_dyn(const WavePacket& packet,
                       const PhysicalConstants& constants);
SpectralPacket apply_h_dyn(const SpectralPacket& packet,
                           const PhysicalConstants& constants);

// Antisymmetric-stencil variant of the generator, kept only as a convergence
// diagnostic: it approaches the spectral form at second order in dx but is
// never used for evolution.
WavePacket apply_h_dyn_stencil(const WavePacket& packet,
                               const PhysicalConstants& constants);

// Max-norm of [psi(t+dt) - psi(t-dt)]/(2 dt) + s c d/dx psi(t); falls off
// at second order in dt.
double schrodinger_residual(const WavePacket& packet, double t, double dt,
                            const PhysicalConstants& constants);

// Evolves by spectral phases (falling back to the exact shift when the
// displacement is a whole number of sites) and reports norm drift plus the
// deviation between the two methods.
EvolutionReport evolve_report(const WavePacket& packet, double t,
                              const PhysicalConstants& constants);

}  // namespace blipfield
