#pragma once

#include <array>
#include <complex>

#include "blipfield/grid.hpp"
#include "blipfield/spectral.hpp"

namespace blipfield {

// Direction of propagation along the axis.  Wave packets on opposite
// directions are orthogonal regardless of spatial overlap.
enum class Direction : int { left = -1, right = +1 };

enum class Polarization : int { horizontal = 0, vertical = 1 };

inline constexpr std::array<Direction, 2> kDirections = {Direction::left,
                                                         Direction::right};
inline constexpr std::array<Polarization, 2> kPolarizations = {
    Polarization::horizontal, Polarization::vertical};

inline int direction_sign(Direction s) { return static_cast<int>(s); }

// Channels are ordered (s=-1,H), (s=-1,V), (s=+1,H), (s=+1,V); this is also
// the row order of the packet CSV format.
inline int channel_index(Direction s, Polarization lambda) {
  return (direction_sign(s) + 1) + static_cast<int>(lambda);
}

const char* polarization_name(Polarization lambda);
const char* channel_name(int channel);
Direction channel_direction(int channel);
Polarization channel_polarization(int channel);

// Single-photon amplitude field psi_{s,lambda}(x_j), units (length)^(-1/2).
// The squared norm is sum_{s,lambda,j} |psi|^2 dx.
class WavePacket {
 public:
  explicit WavePacket(Grid grid);

  const Grid& grid() const { return grid_; }

  ComplexArray& channel(Direction s, Polarization lambda) {
    return channels_[channel_index(s, lambda)];
  }
  const ComplexArray& channel(Direction s, Polarization lambda) const {
    return channels_[channel_index(s, lambda)];
  }
  ComplexArray& channel(int index) { return channels_.at(index); }
  const ComplexArray& channel(int index) const { return channels_.at(index); }

  double norm_squared() const;

 private:
  Grid grid_;
  std::array<ComplexArray, 4> channels_;
};

// Momentum-space counterpart, amplitudes psit_{s,lambda}(k_m).
struct SpectralPacket {
  Grid grid;
  std::array<ComplexArray, 4> channels;

  explicit SpectralPacket(const Grid& g);
  double norm_squared() const;
};

SpectralPacket to_momentum(const WavePacket& packet);
WavePacket from_momentum(const SpectralPacket& packet);

// Normalised Gaussian envelope exp(-(x-center)^2/(4 sigma^2)) e^{i k0 x} on
// one channel; the displacement uses the minimal image on the ring.
WavePacket make_gaussian(const Grid& grid, Direction s, Polarization lambda,
                         double center_x, double sigma_x, double k0);

// Unit-norm excitation of a single lattice site: amplitude 1/sqrt(dx).
WavePacket make_blip(const Grid& grid, Direction s, Polarization lambda,
                     int site);

// Unit-norm excitation of a single momentum mode: e^{i k_m x}/sqrt(L).
WavePacket make_plane_wave(const Grid& grid, Direction s, Polarization lambda,
                           int mode_index);

std::complex<double> inner_product(const WavePacket& a, const WavePacket& b);

WavePacket normalize(const WavePacket& packet);

// |psi_{s,lambda}(x_j)|^2 dx; sums to the squared norm over all channels
// and sites.
double detection_probability(const WavePacket& packet, Direction s,
                             Polarization lambda, int site);

// Position distribution summed over channels, p_j = sum_{s,lambda}
// |psi(x_j)|^2 dx.
RealArray position_distribution(const WavePacket& packet);

// Mean and variance of the position distribution, evaluated with
// minimal-image displacements around the circular mean so they stay
// meaningful when a packet crosses the periodic boundary.
struct PacketMoments {
  double mean;
  double variance;
};
PacketMoments packet_moments(const WavePacket& packet);

WavePacket operator*(std::complex<double> scale, const WavePacket& packet);
WavePacket operator+(const WavePacket& a, const WavePacket& b);

}  // namespace blipfield
