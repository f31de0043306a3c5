#pragma once

#include <array>
#include <vector>

#include "blipfield/classical.hpp"
#include "blipfield/constants.hpp"
#include "blipfield/wavepacket.hpp"

namespace blipfield {

struct EnergyBreakdown {
  double total = 0.0;
  std::array<double, 4> per_channel = {0.0, 0.0, 0.0, 0.0};
  // Truncation-finite vacuum term of the lattice energy observable,
  // diagnostic only; already subtracted from `total`.
  double vacuum_reference = 0.0;
};

// Vacuum-subtracted single-photon energy,
// total = sum_{s,lambda,m} hbar c |k_m| |psit(k_m)|^2 dk.
// Invariant under both evolution operations.
EnergyBreakdown energy_expectation(const WavePacket& packet,
                                   const PhysicalConstants& constants);

// Channel form of the classical energy,
// sum_{s,lambda} integral dx A eps c^2 E_{s,lambda}(x)^2.
double classical_energy(const ClassicalField& field);

// Raw form integral dx (A/2) { eps |E|^2 + |B|^2/mu } over the assembled
// total field vectors; agrees with the channel form identically for
// d'Alembert fields.
double classical_energy_from_totals(const ClassicalField& field);

// Max energy drift of the packet under spectral evolution over the sampled
// times, relative to the initial energy (absolute when the initial energy
// vanishes).
double conservation_probe(const WavePacket& packet,
                          const std::vector<double>& times,
                          const PhysicalConstants& constants);

}  // namespace blipfield
