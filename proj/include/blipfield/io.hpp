#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "blipfield/dynamics.hpp"
#include "blipfield/energy.hpp"
#include "blipfield/fields.hpp"
#include "blipfield/wavepacket.hpp"

#include <json.hpp>

namespace blipfield {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Packet CSV: header "s,lambda,x,re_psi,im_psi", rows ordered by
// (s, lambda, ascending x).  Values are written with 17 significant digits
// so a read round-trips bit-exactly.
void write_packet_csv(const WavePacket& packet,
                      const std::filesystem::path& path);
WavePacket read_packet_csv(const Grid& grid,
                           const std::filesystem::path& path);

// Profile CSV: first column x, then one named column per component.
void write_profile_csv(const std::filesystem::path& path, const Grid& grid,
                       const std::vector<std::string>& names,
                       const std::vector<const RealArray*>& columns);

void write_field_profile_csv(const FieldProfile& profile,
                             const std::filesystem::path& path);

// Kernel tables: (k, r_tilde) rows in transform order and (x, r) rows in
// ascending x.
void write_kernel_momentum_csv(const Kernel& kernel,
                               const std::filesystem::path& path);
void write_kernel_position_csv(const Kernel& kernel,
                               const std::filesystem::path& path);

nlohmann::json to_json(const EnergyBreakdown& breakdown);
nlohmann::json to_json(const EvolutionReport& report);

void write_json(const nlohmann::json& value,
                const std::filesystem::path& path);

std::string format_double(double value);

}  // namespace blipfield
