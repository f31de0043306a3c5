#include "blipfield/wavepacket.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blipfield {

const char* polarization_name(Polarization lambda) {
  return lambda == Polarization::horizontal ? "H" : "V";
}

const char* channel_name(int channel) {
  static constexpr const char* names[4] = {"s-1_H", "s-1_V", "s+1_H",
                                           "s+1_V"};
  return names[channel];
}

Direction channel_direction(int channel) {
  return channel < 2 ? Direction::left : Direction::right;
}

Polarization channel_polarization(int channel) {
  return channel % 2 == 0 ? Polarization::horizontal : Polarization::vertical;
}

WavePacket::WavePacket(Grid grid) : grid_(std::move(grid)) {
  for (auto& ch : channels_) ch = ComplexArray::Zero(grid_.n());
}

double WavePacket::norm_squared() const {
  double sum = 0.0;
  for (const auto& ch : channels_) sum += ch.abs2().sum();
  return sum * grid_.dx();
}

SpectralPacket::SpectralPacket(const Grid& g) : grid(g) {
  for (auto& ch : channels) ch = ComplexArray::Zero(grid.n());
}

double SpectralPacket::norm_squared() const {
  double sum = 0.0;
  for (const auto& ch : channels) sum += ch.abs2().sum();
  return sum * grid.dk();
}

SpectralPacket to_momentum(const WavePacket& packet) {
  SpectralPacket out(packet.grid());
  for (int ch = 0; ch < 4; ++ch) {
    out.channels[ch] = to_momentum(packet.grid(), packet.channel(ch));
  }
  return out;
}

WavePacket from_momentum(const SpectralPacket& packet) {
  WavePacket out(packet.grid);
  for (int ch = 0; ch < 4; ++ch) {
    out.channel(ch) = from_momentum(packet.grid, packet.channels[ch]);
  }
  return out;
}

WavePacket make_gaussian(const Grid& grid, Direction s, Polarization lambda,
                         double center_x, double sigma_x, double k0) {
  if (!(sigma_x >= 2.0 * grid.dx())) {
    throw std::invalid_argument(
        "make_gaussian: sigma_x below 2*dx cannot be resolved on the grid");
  }
  if (center_x < grid.x0() || center_x >= grid.x0() + grid.length()) {
    throw std::invalid_argument("make_gaussian: center_x outside the domain");
  }
  WavePacket packet(grid);
  ComplexArray& amp = packet.channel(s, lambda);
  const std::complex<double> iunit(0.0, 1.0);
  for (int j = 0; j < grid.n(); ++j) {
    const double x = grid.positions()[j];
    const double d = grid.minimal_image(x - center_x);
    amp[j] = std::exp(-d * d / (4.0 * sigma_x * sigma_x)) *
             std::exp(iunit * k0 * x);
  }
  return normalize(packet);
}

WavePacket make_blip(const Grid& grid, Direction s, Polarization lambda,
                     int site) {
  if (site < 0 || site >= grid.n()) {
    throw std::out_of_range("make_blip: site index out of range");
  }
  WavePacket packet(grid);
  packet.channel(s, lambda)[site] = 1.0 / std::sqrt(grid.dx());
  return packet;
}

WavePacket make_plane_wave(const Grid& grid, Direction s, Polarization lambda,
                           int mode_index) {
  if (mode_index < 0 || mode_index >= grid.n()) {
    throw std::out_of_range("make_plane_wave: mode index out of range");
  }
  SpectralPacket spectrum(grid);
  spectrum.channels[channel_index(s, lambda)][mode_index] =
      1.0 / std::sqrt(grid.dk());
  return from_momentum(spectrum);
}

std::complex<double> inner_product(const WavePacket& a, const WavePacket& b) {
  if (a.grid() != b.grid()) {
    throw std::invalid_argument("inner_product: packets on different grids");
  }
  std::complex<double> sum = 0.0;
  for (int ch = 0; ch < 4; ++ch) {
    sum += (a.channel(ch).conjugate() * b.channel(ch)).sum();
  }
  return sum * a.grid().dx();
}

WavePacket normalize(const WavePacket& packet) {
  const double norm2 = packet.norm_squared();
  if (!(norm2 > 0.0)) {
    throw std::invalid_argument("normalize: zero packet");
  }
  return (1.0 / std::sqrt(norm2)) * packet;
}

double detection_probability(const WavePacket& packet, Direction s,
                             Polarization lambda, int site) {
  if (site < 0 || site >= packet.grid().n()) {
    throw std::out_of_range("detection_probability: site index out of range");
  }
  return std::norm(packet.channel(s, lambda)[site]) * packet.grid().dx();
}

RealArray position_distribution(const WavePacket& packet) {
  RealArray p = RealArray::Zero(packet.grid().n());
  for (int ch = 0; ch < 4; ++ch) p += packet.channel(ch).abs2();
  return p * packet.grid().dx();
}

PacketMoments packet_moments(const WavePacket& packet) {
  const Grid& grid = packet.grid();
  const RealArray p = position_distribution(packet);
  const double total = p.sum();
  if (!(total > 0.0)) {
    throw std::invalid_argument("packet_moments: zero packet");
  }

  // Circular mean first, then ordinary moments of the minimal-image
  // displacement about it; identical to the naive moments whenever the
  // packet does not straddle the boundary.
  const double two_pi = 2.0 * std::numbers::pi;
  double cs = 0.0, sn = 0.0;
  for (int j = 0; j < grid.n(); ++j) {
    const double theta = two_pi * (grid.positions()[j] - grid.x0()) /
                         grid.length();
    cs += p[j] * std::cos(theta);
    sn += p[j] * std::sin(theta);
  }
  double phi = std::atan2(sn, cs);
  if (phi < 0.0) phi += two_pi;
  const double mean_raw = grid.x0() + grid.length() * phi / two_pi;

  double mean = 0.0;
  for (int j = 0; j < grid.n(); ++j) {
    mean += p[j] * grid.minimal_image(grid.positions()[j] - mean_raw);
  }
  mean = mean_raw + mean / total;

  double var = 0.0;
  for (int j = 0; j < grid.n(); ++j) {
    const double d = grid.minimal_image(grid.positions()[j] - mean);
    var += p[j] * d * d;
  }
  return {grid.minimal_image(mean), var / total};
}

WavePacket operator*(std::complex<double> scale, const WavePacket& packet) {
  WavePacket out = packet;
  for (int ch = 0; ch < 4; ++ch) out.channel(ch) *= scale;
  return out;
}

WavePacket operator+(const WavePacket& a, const WavePacket& b) {
  if (a.grid() != b.grid()) {
    throw std::invalid_argument("WavePacket sum: packets on different grids");
  }
  WavePacket out = a;
  for (int ch = 0; ch < 4; ++ch) out.channel(ch) += b.channel(ch);
  return out;
}

}  // namespace blipfield
