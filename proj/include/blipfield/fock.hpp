#pragma once

#include <Eigen/Core>
#include <string_view>
#include <vector>

#include "blipfield/constants.hpp"
#include "blipfield/kernel.hpp"
#include "blipfield/wavepacket.hpp"

namespace blipfield {

struct FockMode {
  Direction s;
  double k;
};

// Dense truncated Fock-space representation of unit-norm lattice modes
// a_m = sqrt(dk) a(k_m) for one polarisation sector.  The mode list must be
// closed under k -> -k.  Bosonic relations are exact only below the
// occupancy cap, so assertions are restricted to total occupancy
// <= n_max - 1 (the safe subspace).
class FockOperatorSet {
 public:
  FockOperatorSet(std::vector<FockMode> modes, int n_max,
                  const PhysicalConstants& constants);

  int mode_count() const { return static_cast<int>(modes_.size()); }
  int n_max() const { return n_max_; }
  int dimension() const { return dim_; }
  const std::vector<FockMode>& modes() const { return modes_; }
  const PhysicalConstants& constants() const { return constants_; }

  const Eigen::MatrixXcd& annihilator(int mode) const;
  Eigen::MatrixXcd creator(int mode) const;
  const Eigen::MatrixXcd& h_dyn() const { return h_dyn_; }
  const Eigen::MatrixXcd& h_energy() const { return h_energy_; }
  Eigen::MatrixXcd number_operator() const;

  double vacuum_energy() const { return vacuum_energy_; }

  int occupancy(int state, int mode) const;
  int total_occupancy(int state) const;
  int partner_mode(int mode) const { return partner_[mode]; }

  // Index of the one-photon basis state of `mode`.
  int one_photon_state(int mode) const;

  // Restriction of a matrix to the safe subspace (total occupancy
  // <= n_max - 1).
  Eigen::MatrixXcd restrict_to_safe(const Eigen::MatrixXcd& op) const;

 private:
  std::vector<FockMode> modes_;
  std::vector<int> partner_;
  int n_max_;
  int dim_;
  PhysicalConstants constants_;
  std::vector<Eigen::MatrixXcd> annihilators_;
  Eigen::MatrixXcd h_dyn_;
  Eigen::MatrixXcd h_energy_;
  double vacuum_energy_ = 0.0;
  std::vector<int> safe_states_;
};

FockOperatorSet build_fock_set(std::vector<FockMode> modes, int n_max,
                               const PhysicalConstants& constants);

// Frobenius norm of the tagged commutator on the safe subspace, normalised
// by the operator norms.  Tags: "energy_dyn" for [H_energy, H_dyn],
// "dyn_number" for [H_dyn, N], "annihilator_pair" for [a_0, a_1].
double commutator_norm(const FockOperatorSet& set, std::string_view which);

// ||P ([a_m, a_m'^dag] - delta_mm' I) P||_inf on the safe subspace.
double commutation_defect(const FockOperatorSet& set, int mode,
                          int mode_prime);

// Max deviation of e^{+i H_dyn t/hbar} a_m e^{-i H_dyn t/hbar} from
// e^{-i s c k_m t} a_m (Heisenberg transport of the mode operators).
double heisenberg_shift_deviation(const FockOperatorSet& set, int mode,
                                  double t);

// Smallest eigenvalue of H_energy restricted to the safe subspace, in units
// of its largest eigenvalue magnitude.
double h_energy_min_eigenvalue_relative(const FockOperatorSet& set);

// Brute-force field-operator oracle for a small single-channel grid: builds
// the real field observable E(x_j) as a dense matrix on the Fock basis
// truncated by total occupancy, which is exact for vacuum and one-photon
// moments once the cap is >= 2.
class FieldMomentOracle {
 public:
  FieldMomentOracle(const Grid& grid, Direction s, Polarization lambda,
                    const PhysicalConstants& constants,
                    int max_total_occupancy = 2);

  int dimension() const { return static_cast<int>(basis_.size()); }

  // Vacuum-subtracted <1_psi| E(x_j)^2 |1_psi>.
  double moment(const WavePacket& packet, int site) const;

  // <1_psi| E(x_j) |1_psi>; vanishes identically because the field is
  // linear in the mode operators.
  double first_moment(const WavePacket& packet, int site) const;

 private:
  Eigen::MatrixXcd field_matrix(int site) const;
  Eigen::VectorXcd one_photon_vector(const WavePacket& packet) const;

  Grid grid_;
  Direction s_;
  Polarization lambda_;
  PhysicalConstants constants_;
  RealArray fourier_kernel_;
  std::vector<std::vector<int>> basis_;  // sorted mode multisets
  int max_total_;
};

}  // namespace blipfield
