#pragma once

#include <Eigen/Core>
#include <complex>

#include "blipfield/grid.hpp"

namespace blipfield {

using ComplexArray = Eigen::ArrayXcd;
using RealArray = Eigen::ArrayXd;

// Unitary transform pair between the position and momentum lattices:
//
//   psit(k_m) = dx/sqrt(2 pi) * sum_j e^{-i k_m x_j} psi(x_j)
//   psi(x_j)  = dk/sqrt(2 pi) * sum_m e^{+i k_m x_j} psit(k_m)
//
// Parseval holds exactly: sum |psit|^2 dk = sum |psi|^2 dx.
ComplexArray to_momentum(const Grid& grid, const ComplexArray& values);
ComplexArray from_momentum(const Grid& grid, const ComplexArray& values);

// d/dx realised as multiplication by i*k in momentum space.
ComplexArray spectral_derivative(const Grid& grid, const ComplexArray& values);

}  // namespace blipfield
