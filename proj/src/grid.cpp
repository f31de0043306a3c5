#include "blipfield/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blipfield {

Grid::Grid(int n_points, double length) : n_(n_points), length_(length) {
  if (n_points < 4) {
    throw std::invalid_argument("Grid: need at least 4 points");
  }
  if (n_points % 2 != 0) {
    // Odd grids have no well-defined +-k pairing.
    throw std::invalid_argument("Grid: n_points must be even");
  }
  if (!(length > 0.0)) {
    throw std::invalid_argument("Grid: length must be positive");
  }
  dx_ = length_ / n_;
  dk_ = 2.0 * std::numbers::pi / length_;

  positions_.resize(n_);
  wavenumbers_.resize(n_);
  for (int j = 0; j < n_; ++j) {
    positions_[j] = -0.5 * length_ + j * dx_;
    const int m = j < n_ / 2 ? j : j - n_;
    wavenumbers_[j] = dk_ * m;
  }
}

double Grid::minimal_image(double x) const {
  const double wrapped = x - length_ * std::round(x / length_);
  // round() maps exactly +L/2 to -L/2; keep the convention [-L/2, L/2).
  return wrapped >= 0.5 * length_ ? wrapped - length_ : wrapped;
}

Grid make_grid(int n_points, double length) { return Grid(n_points, length); }

}  // namespace blipfield
