#include "blipfield/fields.hpp"

namespace blipfield {

FieldProfile::FieldProfile(const Grid& g)
    : grid(g),
      e_y(ComplexArray::Zero(g.n())),
      e_z(ComplexArray::Zero(g.n())),
      b_y(ComplexArray::Zero(g.n())),
      b_z(ComplexArray::Zero(g.n())) {}

FieldProfile field_profile(const Kernel& kernel, const WavePacket& packet) {
  const double c = kernel.constants().c;
  const WavePacket reg = regularize(kernel, packet);
  FieldProfile profile(kernel.grid());
  for (Direction s : kDirections) {
    const double sign = direction_sign(s);
    profile.e_y += c * reg.channel(s, Polarization::horizontal);
    profile.e_z += c * reg.channel(s, Polarization::vertical);
    profile.b_y += -sign * reg.channel(s, Polarization::vertical);
    profile.b_z += sign * reg.channel(s, Polarization::horizontal);
  }
  return profile;
}

Eigen::ArrayXd intensity_profile(const Kernel& kernel,
                                 const WavePacket& packet) {
  // For the hermitian field E = (curly_E + h.c.)/2 the vacuum-subtracted
  // one-photon second moment reduces to |<0|curly_E|1>|^2 / 2 per component.
  const FieldProfile profile = field_profile(kernel, packet);
  return 0.5 * (profile.e_y.abs2() + profile.e_z.abs2());
}

Eigen::ArrayXd poynting_profile(const Kernel& kernel,
                                const WavePacket& packet) {
  const PhysicalConstants& constants = kernel.constants();
  const WavePacket reg = regularize(kernel, packet);
  Eigen::ArrayXd s_profile = Eigen::ArrayXd::Zero(kernel.grid().n());
  const double scale = constants.c / (2.0 * constants.mu());
  for (int ch = 0; ch < 4; ++ch) {
    const double sign = direction_sign(channel_direction(ch));
    s_profile += sign * scale * reg.channel(ch).abs2();
  }
  return s_profile;
}

}  // namespace blipfield
