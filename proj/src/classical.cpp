#include "blipfield/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace blipfield {

ClassicalField::ClassicalField(const Grid& g, const PhysicalConstants& consts)
    : grid(g), constants(consts) {
  for (auto& ch : channels) ch = RealArray::Zero(grid.n());
}

RealArray ClassicalField::total_e_y() const {
  return constants.c * (channel(Direction::left, Polarization::horizontal) +
                        channel(Direction::right, Polarization::horizontal));
}

RealArray ClassicalField::total_e_z() const {
  return constants.c * (channel(Direction::left, Polarization::vertical) +
                        channel(Direction::right, Polarization::vertical));
}

RealArray ClassicalField::total_b_y() const {
  return channel(Direction::left, Polarization::vertical) -
         channel(Direction::right, Polarization::vertical);
}

RealArray ClassicalField::total_b_z() const {
  return channel(Direction::right, Polarization::horizontal) -
         channel(Direction::left, Polarization::horizontal);
}

namespace {

RealArray transport_channel(const Grid& grid, const RealArray& values,
                            double displacement) {
  const double shift_sites = displacement / grid.dx();
  const double rounded = std::round(shift_sites);
  if (std::abs(shift_sites - rounded) <=
      1e-9 * std::max(1.0, std::abs(shift_sites))) {
    const int step = grid.wrap(static_cast<int>(
        static_cast<long>(rounded) % grid.n()));
    RealArray out(grid.n());
    for (int j = 0; j < grid.n(); ++j) {
      out[j] = values[grid.wrap(j - step)];
    }
    return out;
  }
  // Band-limited shift via phase factors; real input stays real up to
  // rounding dust.
  ComplexArray spectrum =
      to_momentum(grid, values.cast<std::complex<double>>());
  const std::complex<double> iunit(0.0, 1.0);
  spectrum *= (-iunit * displacement * grid.wavenumbers()).exp();
  return from_momentum(grid, spectrum).real();
}

}  // namespace

ClassicalField dalembert_evolve(const ClassicalField& field, double t) {
  ClassicalField out(field.grid, field.constants);
  for (int ch = 0; ch < 4; ++ch) {
    const double displacement =
        direction_sign(channel_direction(ch)) * field.constants.c * t;
    out.channels[ch] = transport_channel(field.grid, field.channels[ch],
                                         displacement);
  }
  return out;
}

std::pair<double, double> maxwell_residual(const ClassicalField& field,
                                           double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("maxwell_residual: dt must be positive");
  }
  const Grid& grid = field.grid;
  const double c = field.constants.c;

  const ClassicalField plus = dalembert_evolve(field, dt);
  const ClassicalField minus = dalembert_evolve(field, -dt);

  auto ddx = [&](const RealArray& f) {
    RealArray out(grid.n());
    for (int j = 0; j < grid.n(); ++j) {
      out[j] = (f[grid.wrap(j + 1)] - f[grid.wrap(j - 1)]) / (2.0 * grid.dx());
    }
    return out;
  };
  auto ddt = [&](RealArray (ClassicalField::*component)() const) -> RealArray {
    return ((plus.*component)() - (minus.*component)()) / (2.0 * dt);
  };

  // dE_y/dx = -dB_z/dt and dE_z/dx = +dB_y/dt.
  const double line1 = std::max(
      (ddx(field.total_e_y()) + ddt(&ClassicalField::total_b_z))
          .abs()
          .maxCoeff(),
      (ddx(field.total_e_z()) - ddt(&ClassicalField::total_b_y))
          .abs()
          .maxCoeff());
  // c^2 dB_z/dx = -dE_y/dt and c^2 dB_y/dx = +dE_z/dt.
  const double line2 = std::max(
      (c * c * ddx(field.total_b_z()) + ddt(&ClassicalField::total_e_y))
          .abs()
          .maxCoeff(),
      (c * c * ddx(field.total_b_y()) - ddt(&ClassicalField::total_e_z))
          .abs()
          .maxCoeff());
  return {line1, line2};
}

ClassicalField sample_classical_field(
    const Grid& grid, const PhysicalConstants& constants,
    const std::function<double(double)>& profile,
    const std::array<bool, 4>& channels) {
  ClassicalField field(grid, constants);
  for (int ch = 0; ch < 4; ++ch) {
    if (!channels[ch]) continue;
    for (int j = 0; j < grid.n(); ++j) {
      field.channels[ch][j] = profile(grid.positions()[j]);
    }
  }
  return field;
}

}  // namespace blipfield
