#pragma once

#include <array>
#include <functional>
#include <utility>

#include "blipfield/constants.hpp"
#include "blipfield/grid.hpp"
#include "blipfield/spectral.hpp"
#include "blipfield/wavepacket.hpp"

namespace blipfield {

// Classical d'Alembert field: four real channel amplitudes E_{s,lambda}(x).
// The physical E and B vectors are assembled from them with the fixed
// direction-dependent sign structure, so the assembled B always satisfies
// Maxwell's equations when the channels are transported rigidly.
struct ClassicalField {
  Grid grid;
  PhysicalConstants constants;
  std::array<RealArray, 4> channels;

  ClassicalField(const Grid& g, const PhysicalConstants& consts);

  RealArray& channel(Direction s, Polarization lambda) {
    return channels[channel_index(s, lambda)];
  }
  const RealArray& channel(Direction s, Polarization lambda) const {
    return channels[channel_index(s, lambda)];
  }

  // E = sum_s c [E_sH y^ + E_sV z^],  B = sum_s s [-E_sV y^ + E_sH z^].
  RealArray total_e_y() const;
  RealArray total_e_z() const;
  RealArray total_b_y() const;
  RealArray total_b_z() const;
};

// Rigid transport of every channel by s*c*t; exact lattice shift when
// c*t/dx is whole, band-limited spectral shift otherwise.
ClassicalField dalembert_evolve(const ClassicalField& field, double t);

// Max-norm residuals of the two first-order Maxwell equations, evaluated
// with central differences in x and in t (t-samples from transported
// copies).  Second-order accurate in (dx, dt).
std::pair<double, double> maxwell_residual(const ClassicalField& field,
                                           double dt);

// Evaluates a smooth profile on each channel listed in `channels`.
ClassicalField sample_classical_field(
    const Grid& grid, const PhysicalConstants& constants,
    const std::function<double(double)>& profile,
    const std::array<bool, 4>& channels);

}  // namespace blipfield
