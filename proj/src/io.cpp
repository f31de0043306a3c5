#include "blipfield/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace blipfield {

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

void write_packet_csv(const WavePacket& packet,
                      const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << "s,lambda,x,re_psi,im_psi\n";
  for (int ch = 0; ch < 4; ++ch) {
    const Direction s = channel_direction(ch);
    const Polarization lambda = channel_polarization(ch);
    const ComplexArray& amp = packet.channel(ch);
    for (int j = 0; j < packet.grid().n(); ++j) {
      out << direction_sign(s) << ',' << polarization_name(lambda) << ','
          << format_double(packet.grid().positions()[j]) << ','
          << format_double(amp[j].real()) << ',' << format_double(amp[j].imag())
          << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path.string());
}

WavePacket read_packet_csv(const Grid& grid,
                           const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "s,lambda,x,re_psi,im_psi") {
    throw IoError("packet CSV header mismatch in " + path.string());
  }
  WavePacket packet(grid);
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 5) {
      throw IoError("packet CSV row with wrong field count in " +
                    path.string());
    }
    const int s_value = std::stoi(fields[0]);
    if (s_value != -1 && s_value != 1) {
      throw IoError("packet CSV: s must be -1 or 1");
    }
    const Direction s = s_value < 0 ? Direction::left : Direction::right;
    Polarization lambda;
    if (fields[1] == "H") {
      lambda = Polarization::horizontal;
    } else if (fields[1] == "V") {
      lambda = Polarization::vertical;
    } else {
      throw IoError("packet CSV: lambda must be H or V");
    }
    const int j = row % grid.n();
    const double x = std::stod(fields[2]);
    if (std::abs(x - grid.positions()[j]) >
        1e-9 * std::max(1.0, grid.length())) {
      throw IoError("packet CSV: x column does not match the grid");
    }
    packet.channel(s, lambda)[j] = {std::stod(fields[3]),
                                    std::stod(fields[4])};
    ++row;
  }
  if (row != 4 * grid.n()) {
    throw IoError("packet CSV: expected " + std::to_string(4 * grid.n()) +
                  " rows, found " + std::to_string(row));
  }
  return packet;
}

void write_profile_csv(const std::filesystem::path& path, const Grid& grid,
                       const std::vector<std::string>& names,
                       const std::vector<const RealArray*>& columns) {
  std::ofstream out = open_output(path);
  out << "x";
  for (const auto& name : names) out << ',' << name;
  out << '\n';
  for (int j = 0; j < grid.n(); ++j) {
    out << format_double(grid.positions()[j]);
    for (const RealArray* column : columns) {
      out << ',' << format_double((*column)[j]);
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

void write_field_profile_csv(const FieldProfile& profile,
                             const std::filesystem::path& path) {
  const RealArray re_ey = profile.e_y.real(), im_ey = profile.e_y.imag();
  const RealArray re_ez = profile.e_z.real(), im_ez = profile.e_z.imag();
  const RealArray re_by = profile.b_y.real(), im_by = profile.b_y.imag();
  const RealArray re_bz = profile.b_z.real(), im_bz = profile.b_z.imag();
  write_profile_csv(path, profile.grid,
                    {"re_e_y", "im_e_y", "re_e_z", "im_e_z", "re_b_y",
                     "im_b_y", "re_b_z", "im_b_z"},
                    {&re_ey, &im_ey, &re_ez, &im_ez, &re_by, &im_by, &re_bz,
                     &im_bz});
}

void write_kernel_momentum_csv(const Kernel& kernel,
                               const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << "k,r_tilde\n";
  for (int m = 0; m < kernel.grid().n(); ++m) {
    out << format_double(kernel.grid().wavenumbers()[m]) << ','
        << format_double(kernel.fourier_values()[m]) << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

void write_kernel_position_csv(const Kernel& kernel,
                               const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << "x,r\n";
  for (int j = 0; j < kernel.grid().n(); ++j) {
    out << format_double(kernel.grid().positions()[j]) << ','
        << format_double(kernel.position_values()[j]) << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

nlohmann::json to_json(const EnergyBreakdown& breakdown) {
  nlohmann::json per_channel;
  for (int ch = 0; ch < 4; ++ch) {
    per_channel[channel_name(ch)] = breakdown.per_channel[ch];
  }
  return {{"total", breakdown.total},
          {"per_channel", per_channel},
          {"vacuum_reference", breakdown.vacuum_reference}};
}

nlohmann::json to_json(const EvolutionReport& report) {
  return {{"method", report.method},
          {"t", report.t},
          {"norm_drift", report.norm_drift},
          {"max_deviation", report.max_deviation}};
}

void write_json(const nlohmann::json& value,
                const std::filesystem::path& path) {
  std::ofstream out = open_output(path);
  out << value.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace blipfield
