#include "blipfield/spectral.hpp"

#include <fftw3.h>

#include <complex>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace blipfield {

namespace {

// FFTW planning is not thread-safe; execution on caller buffers is.  Plans
// are created unaligned so they can run on any array of the right size.
class PlanCache {
 public:
  fftw_plan get(int n, int sign) {
    std::scoped_lock lock(mutex_);
    auto& table = sign == FFTW_FORWARD ? forward_ : backward_;
    auto it = table.find(n);
    if (it != table.end()) return it->second;
    std::vector<std::complex<double>> in(n), out(n);
    fftw_plan plan = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(in.data()),
        reinterpret_cast<fftw_complex*>(out.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) {
      throw std::runtime_error("spectral: FFTW plan creation failed");
    }
    table.emplace(n, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [n, plan] : forward_) fftw_destroy_plan(plan);
    for (auto& [n, plan] : backward_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::unordered_map<int, fftw_plan> forward_;
  std::unordered_map<int, fftw_plan> backward_;
};

PlanCache& plans() {
  static PlanCache cache;
  return cache;
}

void run_dft(int n, int sign, const ComplexArray& in, ComplexArray& out) {
  ComplexArray buffer = in;  // fftw wants mutable input
  out.resize(n);
  fftw_execute_dft(plans().get(n, sign),
                   reinterpret_cast<fftw_complex*>(buffer.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

void check_size(const Grid& grid, const ComplexArray& values,
                const char* what) {
  if (values.size() != grid.n()) {
    throw std::invalid_argument(std::string(what) +
                                ": array length does not match the grid");
  }
}

// With x_j = -L/2 + j dx the offset phases e^{-+i k_m L/2} reduce to
// (-1)^m exactly, which keeps the transforms free of trigonometric
// rounding.
void apply_alternating_sign(ComplexArray& values) {
  for (Eigen::Index m = 1; m < values.size(); m += 2) values[m] = -values[m];
}

}  // namespace

ComplexArray to_momentum(const Grid& grid, const ComplexArray& values) {
  check_size(grid, values, "to_momentum");
  ComplexArray out;
  run_dft(grid.n(), FFTW_FORWARD, values, out);
  apply_alternating_sign(out);
  out *= grid.dx() / std::sqrt(2.0 * std::numbers::pi);
  return out;
}

ComplexArray from_momentum(const Grid& grid, const ComplexArray& values) {
  check_size(grid, values, "from_momentum");
  ComplexArray in = values;
  apply_alternating_sign(in);
  ComplexArray out;
  run_dft(grid.n(), FFTW_BACKWARD, in, out);
  out *= grid.dk() / std::sqrt(2.0 * std::numbers::pi);
  return out;
}

ComplexArray spectral_derivative(const Grid& grid, const ComplexArray& values) {
  ComplexArray spectrum = to_momentum(grid, values);
  const std::complex<double> iunit(0.0, 1.0);
  spectrum *= iunit * grid.wavenumbers();
  return from_momentum(grid, spectrum);
}

}  // namespace blipfield
