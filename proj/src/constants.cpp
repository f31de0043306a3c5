#include "blipfield/constants.hpp"

#include <stdexcept>

namespace blipfield {

PhysicalConstants::PhysicalConstants(double hbar_in, double c_in,
                                     double epsilon_in, double area_in)
    : hbar(hbar_in), c(c_in), epsilon(epsilon_in), area(area_in) {
  if (!(hbar > 0.0) || !(c > 0.0) || !(epsilon > 0.0) || !(area > 0.0)) {
    throw std::invalid_argument(
        "PhysicalConstants: hbar, c, epsilon and area must all be positive");
  }
}

}  // namespace blipfield
