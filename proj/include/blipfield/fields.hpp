#pragma once

#include "blipfield/kernel.hpp"

namespace blipfield {

// Vacuum-to-one-photon matrix elements of the complex field observables,
// <0|E(x)|1_psi> and <0|B(x)|1_psi> per Cartesian component.  Linear in the
// packet amplitudes.
struct FieldProfile {
  Grid grid;
  ComplexArray e_y;
  ComplexArray e_z;
  ComplexArray b_y;
  ComplexArray b_z;

  explicit FieldProfile(const Grid& g);
};

FieldProfile field_profile(const Kernel& kernel, const WavePacket& packet);

// Vacuum-subtracted <1|E(x)^2|1> summed over the two Cartesian components.
Eigen::ArrayXd intensity_profile(const Kernel& kernel,
                                 const WavePacket& packet);

// Vacuum-subtracted Poynting expectation; positive values indicate
// propagation to the right.
Eigen::ArrayXd poynting_profile(const Kernel& kernel,
                                const WavePacket& packet);

}  // namespace blipfield
