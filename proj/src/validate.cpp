#include "blipfield/validate.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "blipfield/classical.hpp"
#include "blipfield/dynamics.hpp"
#include "blipfield/energy.hpp"
#include "blipfield/fields.hpp"
#include "blipfield/fock.hpp"
#include "blipfield/kernel.hpp"

namespace blipfield {

namespace {

void add_check(std::vector<CheckResult>& checks, int criterion,
               std::string name, double measured, double threshold,
               std::string detail = {}) {
  checks.push_back({criterion, std::move(name), measured <= threshold,
                    measured, threshold, std::move(detail)});
}

double max_channel_difference(const WavePacket& a, const WavePacket& b) {
  double diff = 0.0;
  for (int ch = 0; ch < 4; ++ch) {
    diff = std::max(diff, (a.channel(ch) - b.channel(ch)).abs().maxCoeff());
  }
  return diff;
}

// 1: exact lattice shift against the spectral phase evolution.
void check_transport_equivalence(std::vector<CheckResult>& checks,
                                 const PhysicalConstants& constants) {
  const Grid grid = make_grid(1024, 64.0);
  const WavePacket packet = make_gaussian(
      grid, Direction::right, Polarization::horizontal, -16.0, 1.0, 0.0);
  const double t = 64.0 * grid.dx() / constants.c;
  const double diff = max_channel_difference(
      shift_evolve(packet, t, constants), spectral_evolve(packet, t, constants));
  add_check(checks, 1, "transport_equivalence", diff, 1e-10,
            "shift vs spectral, c*t = 64*dx");
}

// 2: variance of |psi|^2 under 100 evolution steps.
void check_no_dispersion(std::vector<CheckResult>& checks,
                         const PhysicalConstants& constants) {
  const Grid grid = make_grid(1024, 64.0);
  WavePacket packet = make_gaussian(grid, Direction::right,
                                    Polarization::horizontal, -16.0, 1.0, 2.0);
  const double dt = 0.2 / constants.c;
  const double reference = packet_moments(packet).variance;
  double drift = 0.0;
  for (int step = 0; step < 100; ++step) {
    packet = spectral_evolve(packet, dt, constants);
    drift = std::max(drift, std::abs(packet_moments(packet).variance -
                                     reference));
  }
  add_check(checks, 2, "no_dispersion", drift / reference, 1e-9,
            "relative variance drift over 100 steps");
}

// 3: unitarity of the evolution and the counter-propagating overlap.
void check_unitarity(std::vector<CheckResult>& checks,
                     const PhysicalConstants& constants) {
  const Grid grid = make_grid(1024, 64.0);
  WavePacket packet = make_gaussian(grid, Direction::right,
                                    Polarization::horizontal, -16.0, 1.0, 2.0);
  const double dt = 0.37 / constants.c;
  double drift = 0.0;
  for (int step = 0; step < 100; ++step) {
    packet = spectral_evolve(packet, dt, constants);
    drift = std::max(drift, std::abs(std::sqrt(packet.norm_squared()) - 1.0));
  }
  add_check(checks, 3, "unitarity_norm_drift", drift, 1e-10,
            "norm drift over 100 steps");

  const double a = 8.0;
  const WavePacket right = make_gaussian(grid, Direction::right,
                                         Polarization::horizontal, -a, 1.0, 0.0);
  const WavePacket left = make_gaussian(grid, Direction::left,
                                        Polarization::horizontal, a, 1.0, 0.0);
  double overlap = 0.0;
  for (int i = 0; i < 20; ++i) {
    // Sweep through full spatial overlap at t = a/c.
    const double t = 2.0 * a / constants.c * i / 19.0;
    overlap = std::max(
        overlap, std::abs(inner_product(spectral_evolve(right, t, constants),
                                        spectral_evolve(left, t, constants))));
  }
  add_check(checks, 3, "counter_propagating_orthogonality", overlap, 1e-12,
            "mirrored packets on opposite directions, 20 sampled times");
}

// 4: the generator is momentum-diagonal with entries hbar*s*c*k.
void check_generator_spectrum(std::vector<CheckResult>& checks,
                              const PhysicalConstants& constants) {
  const Grid grid = make_grid(32, 16.0);
  double deviation = 0.0;
  for (Direction s : kDirections) {
    for (int m = 0; m < grid.n(); ++m) {
      SpectralPacket basis(grid);
      basis.channels[channel_index(s, Polarization::horizontal)][m] = 1.0;
      const SpectralPacket image = apply_h_dyn(basis, constants);
      for (int ch = 0; ch < 4; ++ch) {
        for (int mm = 0; mm < grid.n(); ++mm) {
          const std::complex<double> expected =
              (ch == channel_index(s, Polarization::horizontal) && mm == m)
                  ? constants.hbar * direction_sign(s) * constants.c *
                        grid.wavenumbers()[m]
                  : 0.0;
          deviation = std::max(deviation,
                               std::abs(image.channels[ch][mm] - expected));
        }
      }
      // +-k pairing of the eigenvalues, exact sign flip.
      const int mb = grid.negative_mode(m);
      const double ev = constants.hbar * direction_sign(s) * constants.c;
      if (mb != m) {
        deviation = std::max(deviation,
                             std::abs(ev * grid.wavenumbers()[m] +
                                      ev * grid.wavenumbers()[mb]));
      }
    }
  }
  add_check(checks, 4, "generator_spectrum", deviation, 0.0,
            "momentum-diagonal entries hbar*s*c*k, both directions");
}

// 5: single-mode photon energy in the fast path and the Fock oracle.
void check_monochromatic_energy(std::vector<CheckResult>& checks,
                                const PhysicalConstants& constants) {
  const Grid grid = make_grid(256, 64.0);
  const int mode = 7;
  const double k0 = grid.wavenumbers()[mode];
  const double expected = constants.hbar * constants.c * std::abs(k0);

  const WavePacket packet = make_plane_wave(grid, Direction::right,
                                            Polarization::horizontal, mode);
  const double fast = energy_expectation(packet, constants).total;
  add_check(checks, 5, "monochromatic_energy_fast_path",
            std::abs(fast - expected) / expected, 1e-12,
            "single-mode packet energy vs hbar*c*|k0|");

  const FockOperatorSet set = build_fock_set(
      {{Direction::right, k0}, {Direction::right, -k0}}, 2, constants);
  const int one = set.one_photon_state(0);
  const double oracle =
      set.h_energy()(one, one).real() - set.vacuum_energy();
  add_check(checks, 5, "monochromatic_energy_fock_oracle",
            std::abs(oracle - expected) / expected, 1e-12,
            "vacuum-subtracted <1_k|H_energy|1_k>");
}

// 6: narrowband Gaussian energy, sigma_k/k0 = 0.05.
void check_narrowband_energy(std::vector<CheckResult>& checks,
                             const PhysicalConstants& constants) {
  const Grid grid = make_grid(1024, 64.0);
  const double k0 = 2.0;
  const double sigma_k = 0.1;
  const WavePacket packet =
      make_gaussian(grid, Direction::right, Polarization::horizontal, 0.0,
                    1.0 / (2.0 * sigma_k), k0);
  const double total = energy_expectation(packet, constants).total;
  add_check(checks, 6, "narrowband_gaussian_energy", std::abs(total - 2.0),
            1e-3, "k0 = 2, sigma_k = 0.1, natural units");
}

// 7: the kernel law in momentum and position space.
void check_kernel_law(std::vector<CheckResult>& checks,
                      const PhysicalConstants& constants) {
  const Grid grid = make_grid(4096, 64.0);
  const Kernel kernel = build_kernel(grid, constants);

  const int mode_pi =
      static_cast<int>(std::lround(std::numbers::pi / grid.dk()));
  add_check(checks, 7, "kernel_momentum_value",
            std::abs(kernel.fourier_values()[mode_pi] - 1.0), 1e-14,
            "R~(pi) = 1 in natural units");

  const int center = grid.n() / 2;  // x = 0
  const double lo = tail_fit_min_separation(grid);
  const double hi = tail_fit_max_separation(grid);
  const double slope = fit_tail_exponent(kernel.position_values().abs(), grid,
                                         center, lo, hi);
  add_check(checks, 7, "kernel_position_tail", std::abs(slope + 1.5), 0.05,
            "log-log slope of |R(x)| in the far zone");

  const WavePacket blip =
      make_blip(grid, Direction::right, Polarization::horizontal, center);
  const RealArray intensity = intensity_profile(kernel, blip);
  const double islope = fit_tail_exponent(intensity, grid, center, lo, hi);
  add_check(checks, 7, "intensity_tail", std::abs(islope + 3.0), 0.1,
            "log-log slope of the blip intensity in the far zone");
}

// 8: truncated-Fock commutators and positivity, M = 6, n_max = 2.
void check_fock_commutators(std::vector<CheckResult>& checks,
                            const PhysicalConstants& constants) {
  const std::vector<FockMode> modes = {
      {Direction::right, 0.5},  {Direction::right, -0.5},
      {Direction::left, 0.5},   {Direction::left, -0.5},
      {Direction::right, 1.0},  {Direction::right, -1.0}};
  const FockOperatorSet set = build_fock_set(modes, 2, constants);
  add_check(checks, 8, "commutator_energy_dyn",
            commutator_norm(set, "energy_dyn"), 1e-10,
            "[H_energy, H_dyn] on the safe subspace");
  add_check(checks, 8, "commutator_dyn_number",
            commutator_norm(set, "dyn_number"), 1e-12,
            "[H_dyn, N] on the safe subspace");
  add_check(checks, 8, "h_energy_positivity",
            -h_energy_min_eigenvalue_relative(set), 1e-10,
            "smallest eigenvalue of H_energy, relative");
}

// 9: energy conservation under evolution.
void check_energy_conservation(std::vector<CheckResult>& checks,
                               const PhysicalConstants& constants) {
  const Grid grid = make_grid(512, 64.0);
  const WavePacket packet = make_gaussian(
      grid, Direction::right, Polarization::horizontal, -8.0, 2.0, 2.0);
  std::vector<double> times;
  for (int i = 1; i <= 100; ++i) times.push_back(0.32 * i / constants.c);
  add_check(checks, 9, "energy_conservation",
            conservation_probe(packet, times, constants), 1e-10,
            "relative energy drift over 100 sampled times");
}

// 10: the classical Maxwell/d'Alembert oracle.
void check_classical_oracle(std::vector<CheckResult>& checks,
                            const PhysicalConstants& constants,
                            std::mt19937_64& rng) {
  auto bump = [](double x) { return std::exp(-x * x / 8.0); };
  std::array<bool, 4> only_right_h = {false, false, true, false};

  double worst_ratio_error = 0.0;
  for (int line = 0; line < 2; ++line) {
    const Grid coarse = make_grid(256, 64.0);
    const Grid fine = make_grid(512, 64.0);
    const auto coarse_res = maxwell_residual(
        sample_classical_field(coarse, constants, bump, only_right_h),
        coarse.dx() / (2.0 * constants.c));
    const auto fine_res = maxwell_residual(
        sample_classical_field(fine, constants, bump, only_right_h),
        fine.dx() / (2.0 * constants.c));
    const double ratio = line == 0 ? coarse_res.first / fine_res.first
                                   : coarse_res.second / fine_res.second;
    worst_ratio_error = std::max(worst_ratio_error, std::abs(ratio - 4.0));
  }
  add_check(checks, 10, "maxwell_residual_convergence", worst_ratio_error,
            1.0, "second-order residual ratio under mesh halving, 4 +- 25%");

  // Random band-limited d'Alembert field on all four channels.
  const Grid grid = make_grid(256, 64.0);
  ClassicalField field(grid, constants);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  for (int ch = 0; ch < 4; ++ch) {
    for (int mode = 1; mode <= 6; ++mode) {
      const double a = amp(rng);
      const double phase = std::numbers::pi * amp(rng);
      for (int j = 0; j < grid.n(); ++j) {
        field.channels[ch][j] +=
            a * std::cos(grid.dk() * mode * grid.positions()[j] + phase);
      }
    }
  }
  const double channel_form = classical_energy(field);
  const double total_form = classical_energy_from_totals(field);
  add_check(checks, 10, "classical_energy_forms",
            std::abs(channel_form - total_form) / channel_form, 1e-12,
            "channel form vs raw E,B form of the classical energy");
}

// 11: Poynting sign rules and the flux/energy ratio.
void check_poynting(std::vector<CheckResult>& checks,
                    const PhysicalConstants& constants) {
  const Grid grid = make_grid(1024, 64.0);
  const Kernel kernel = build_kernel(grid, constants);
  const WavePacket right = make_gaussian(grid, Direction::right,
                                         Polarization::horizontal, 0.0, 1.0,
                                         2.0);
  const RealArray flux = poynting_profile(kernel, right);
  add_check(checks, 11, "poynting_pointwise_sign", -flux.minCoeff(), 1e-15,
            "right-mover flux is non-negative at every site");

  const double integrated = constants.area * flux.sum() * grid.dx();
  const double expected =
      constants.c * energy_expectation(right, constants).total;
  add_check(checks, 11, "poynting_energy_ratio",
            std::abs(integrated - expected) / expected, 1e-9,
            "A * integral S dx vs c * total energy for a pure right-mover");

  const WavePacket left = make_gaussian(grid, Direction::left,
                                        Polarization::horizontal, 0.0, 1.0,
                                        2.0);
  const RealArray mirrored = poynting_profile(kernel, left);
  add_check(checks, 11, "poynting_mirror_sign",
            (flux + mirrored).abs().maxCoeff() / flux.abs().maxCoeff(), 1e-12,
            "left-mover flux is the negated right-mover flux");
}

// 12: production intensity against the dense field-moment oracle.
void check_fields_vs_oracle(std::vector<CheckResult>& checks,
                            const PhysicalConstants& constants,
                            std::mt19937_64& rng) {
  const Grid grid = make_grid(16, 8.0);
  SpectralPacket spectrum(grid);
  std::normal_distribution<double> normal;
  auto& channel = spectrum.channels[channel_index(Direction::right,
                                                  Polarization::horizontal)];
  for (int m = 0; m < grid.n(); ++m) {
    channel[m] = std::complex<double>(normal(rng), normal(rng));
  }
  const WavePacket packet = normalize(from_momentum(spectrum));

  const Kernel kernel = build_kernel(grid, constants);
  const RealArray intensity = intensity_profile(kernel, packet);
  const FieldMomentOracle oracle(grid, Direction::right,
                                 Polarization::horizontal, constants);
  double diff = 0.0;
  for (int j = 0; j < grid.n(); ++j) {
    diff = std::max(diff, std::abs(intensity[j] - oracle.moment(packet, j)));
  }
  add_check(checks, 12, "intensity_vs_fock_oracle", diff, 1e-8,
            "N = 16 single-channel grid, dense operator matrices");
}

// 13: dynamical Hamiltonian vs energy observable sign split.
void check_sign_split(std::vector<CheckResult>& checks,
                      const PhysicalConstants& constants) {
  const Grid grid = make_grid(256, 64.0);
  const int mode = 5;  // k > 0
  const double k = grid.wavenumbers()[mode];
  const WavePacket packet =
      make_plane_wave(grid, Direction::left, Polarization::horizontal, mode);
  const double h_dyn =
      inner_product(packet, apply_h_dyn(packet, constants)).real();
  const double energy = energy_expectation(packet, constants).total;
  const double scale = constants.hbar * constants.c * k;
  const double deviation = std::max(std::abs(h_dyn + scale),
                                    std::abs(energy - scale)) / scale;
  add_check(checks, 13, "dyn_vs_energy_sign_split", deviation, 1e-12,
            "s = -1, k > 0: <H_dyn> = -hbar c k while energy = +hbar c k");
}

}  // namespace

std::vector<CheckResult> run_validation_suite(const ValidationOptions& options) {
  const PhysicalConstants constants = PhysicalConstants::natural();
  std::mt19937_64 rng(options.seed);
  std::vector<CheckResult> checks;
  check_transport_equivalence(checks, constants);
  check_no_dispersion(checks, constants);
  check_unitarity(checks, constants);
  check_generator_spectrum(checks, constants);
  check_monochromatic_energy(checks, constants);
  check_narrowband_energy(checks, constants);
  check_kernel_law(checks, constants);
  check_fock_commutators(checks, constants);
  check_energy_conservation(checks, constants);
  check_classical_oracle(checks, constants, rng);
  check_poynting(checks, constants);
  check_fields_vs_oracle(checks, constants, rng);
  check_sign_split(checks, constants);
  return checks;
}

nlohmann::json validation_report_json(const std::vector<CheckResult>& checks) {
  nlohmann::json items = nlohmann::json::array();
  bool all_passed = true;
  for (const CheckResult& check : checks) {
    all_passed = all_passed && check.passed;
    items.push_back({{"criterion", check.criterion},
                     {"name", check.name},
                     {"passed", check.passed},
                     {"measured", check.measured},
                     {"threshold", check.threshold},
                     {"detail", check.detail}});
  }
  return {{"all_passed", all_passed}, {"checks", items}};
}

}  // namespace blipfield
