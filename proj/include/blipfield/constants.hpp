#pragma once

namespace blipfield {

// Unit system shared by every formula in the library.  The permeability is
// always derived from (epsilon, c) so that c = 1/sqrt(epsilon*mu) holds
// exactly; it can never drift out of sync with the other constants.
struct PhysicalConstants {
  double hbar;
  double c;
  double epsilon;
  double area;

  PhysicalConstants(double hbar, double c, double epsilon, double area);

  double mu() const { return 1.0 / (epsilon * c * c); }

  // hbar = c = epsilon = area = 1 (hence mu = 1).
  static PhysicalConstants natural() { return {1.0, 1.0, 1.0, 1.0}; }
};

}  // namespace blipfield
