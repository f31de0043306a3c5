#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blipfield/constants.hpp"
#include "blipfield/grid.hpp"
#include "blipfield/wavepacket.hpp"

#include <json.hpp>

namespace blipfield {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Subcommand { evolve, energy, fields, kernel, validate };

Subcommand subcommand_from_name(const std::string& name);

struct PacketSpec {
  enum class Kind { gaussian, blip, custom_file };
  Kind kind = Kind::gaussian;
  Direction s = Direction::right;
  Polarization lambda = Polarization::horizontal;
  // gaussian
  double center_x = 0.0;
  double sigma_x = 1.0;
  double k0 = 0.0;
  // blip
  int site = 0;
  // custom-file
  std::filesystem::path path;
  // weight applied before the final normalisation of the superposition
  std::complex<double> amplitude = {1.0, 0.0};
};

// Parsed and validated scenario.  Unknown keys anywhere are rejected.
struct ScenarioConfig {
  PhysicalConstants constants = PhysicalConstants::natural();
  int n_points = 0;
  double length = 0.0;
  std::vector<PacketSpec> packets;

  // run block
  std::vector<double> times;                    // evolve
  std::optional<double> fit_min_separation;     // kernel
  std::optional<double> fit_max_separation;     // kernel
  std::uint64_t seed = 20260808;                // validate

  Grid make_grid_object() const;
  // Normalised superposition of the configured packet blocks.
  WavePacket build_packet(const Grid& grid) const;
};

ScenarioConfig parse_scenario(const nlohmann::json& root, Subcommand command,
                              const std::filesystem::path& config_dir);
ScenarioConfig load_scenario(const std::filesystem::path& config_path,
                             Subcommand command);

}  // namespace blipfield
