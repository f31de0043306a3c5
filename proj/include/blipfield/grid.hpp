#pragma once

#include <Eigen/Core>

namespace blipfield {

// Periodic lattice of n points on [-L/2, L/2).  Wavenumbers are stored in
// transform order k_m = 2*pi*m/L with m = 0, 1, ..., n/2-1, -n/2, ..., -1,
// so the Nyquist mode sits at index n/2 and is its own negative on the
// lattice.  Index arithmetic wraps modulo n.
class Grid {
 public:
  Grid(int n_points, double length);

  int n() const { return n_; }
  double length() const { return length_; }
  double dx() const { return dx_; }
  double dk() const { return dk_; }
  double x0() const { return positions_[0]; }

  const Eigen::ArrayXd& positions() const { return positions_; }
  const Eigen::ArrayXd& wavenumbers() const { return wavenumbers_; }

  int wrap(int j) const {
    int r = j % n_;
    return r < 0 ? r + n_ : r;
  }

  // Index of the mode with wavenumber -k_m.  k = 0 and the Nyquist mode map
  // to themselves.
  int negative_mode(int m) const { return m == 0 ? 0 : n_ - m; }

  int nyquist_index() const { return n_ / 2; }

  // Displacement x wrapped to the minimal image in [-L/2, L/2).
  double minimal_image(double x) const;

  bool operator==(const Grid& other) const {
    return n_ == other.n_ && length_ == other.length_;
  }
  bool operator!=(const Grid& other) const { return !(*this == other); }

 private:
  int n_;
  double length_;
  double dx_;
  double dk_;
  Eigen::ArrayXd positions_;
  Eigen::ArrayXd wavenumbers_;
};

Grid make_grid(int n_points, double length);

}  // namespace blipfield
