#include "blipfield/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>

namespace blipfield {

namespace {

constexpr int kMaxDimension = 4096;

double kernel_weight(double k, const PhysicalConstants& constants) {
  // (A eps pi c^2 / 2) R~(k)^2 = hbar c |k| / 2.
  return 0.5 * constants.hbar * constants.c * std::abs(k);
}

}  // namespace

FockOperatorSet::FockOperatorSet(std::vector<FockMode> modes, int n_max,
                                 const PhysicalConstants& constants)
    : modes_(std::move(modes)), n_max_(n_max), constants_(constants) {
  if (modes_.empty()) {
    throw std::invalid_argument("FockOperatorSet: empty mode list");
  }
  if (n_max_ < 1) {
    throw std::invalid_argument("FockOperatorSet: n_max must be >= 1");
  }

  const int m_count = static_cast<int>(modes_.size());
  double dim = 1.0;
  for (int i = 0; i < m_count; ++i) dim *= n_max_ + 1;
  if (dim > kMaxDimension) {
    throw std::invalid_argument(
        "FockOperatorSet: (n_max+1)^M exceeds the dense-matrix cap");
  }
  dim_ = static_cast<int>(dim);

  // Every mode must have its k -> -k partner within the same direction;
  // k = 0 pairs with itself.
  partner_.assign(m_count, -1);
  for (int a = 0; a < m_count; ++a) {
    for (int b = 0; b < m_count; ++b) {
      if (modes_[a].s == modes_[b].s &&
          std::abs(modes_[a].k + modes_[b].k) <=
              1e-12 * std::max(1.0, std::abs(modes_[a].k))) {
        partner_[a] = b;
        break;
      }
    }
    if (partner_[a] < 0) {
      throw std::invalid_argument(
          "FockOperatorSet: mode list not closed under k -> -k");
    }
  }

  const int q = n_max_ + 1;
  auto digit = [&](int state, int mode) {
    int v = state;
    for (int i = 0; i < mode; ++i) v /= q;
    return v % q;
  };
  auto weight = [&](int mode) {
    int w = 1;
    for (int i = 0; i < mode; ++i) w *= q;
    return w;
  };

  annihilators_.assign(m_count, Eigen::MatrixXcd::Zero(dim_, dim_));
  for (int m = 0; m < m_count; ++m) {
    const int w = weight(m);
    for (int state = 0; state < dim_; ++state) {
      const int n = digit(state, m);
      if (n > 0) {
        annihilators_[m](state - w, state) = std::sqrt(double(n));
      }
    }
  }

  h_dyn_ = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int state = 0; state < dim_; ++state) {
    double value = 0.0;
    for (int m = 0; m < m_count; ++m) {
      value += constants_.hbar * direction_sign(modes_[m].s) * constants_.c *
               modes_[m].k * digit(state, m);
    }
    h_dyn_(state, state) = value;
  }

  // H_energy = sum_m (hbar c |k_m|/2) [a+_m a_m + a_mbar a+_mbar
  //                                    + a+_m a+_mbar + a_mbar a_m]
  // assembled by matrix products, cross terms included.  The ladder matrices
  // have at most one entry per column, so the products are done sparsely.
  using Sparse = Eigen::SparseMatrix<std::complex<double>>;
  Sparse h_energy_sparse(dim_, dim_);
  for (int m = 0; m < m_count; ++m) {
    const int mb = partner_[m];
    const double w = kernel_weight(modes_[m].k, constants_);
    const Sparse a_m = annihilators_[m].sparseView();
    const Sparse a_mb = annihilators_[mb].sparseView();
    const Sparse ad_m = Sparse(a_m.adjoint());
    const Sparse ad_mb = Sparse(a_mb.adjoint());
    h_energy_sparse += (w * (Sparse(ad_m * a_m) + Sparse(a_mb * ad_mb) +
                             Sparse(ad_m * ad_mb) + Sparse(a_mb * a_m)))
                           .pruned();
  }
  h_energy_ = Eigen::MatrixXcd(h_energy_sparse);
  vacuum_energy_ = h_energy_(0, 0).real();

  safe_states_.clear();
  for (int state = 0; state < dim_; ++state) {
    if (total_occupancy(state) <= n_max_ - 1) safe_states_.push_back(state);
  }
}

const Eigen::MatrixXcd& FockOperatorSet::annihilator(int mode) const {
  return annihilators_.at(mode);
}

Eigen::MatrixXcd FockOperatorSet::creator(int mode) const {
  return annihilators_.at(mode).adjoint();
}

Eigen::MatrixXcd FockOperatorSet::number_operator() const {
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int state = 0; state < dim_; ++state) {
    n(state, state) = total_occupancy(state);
  }
  return n;
}

int FockOperatorSet::occupancy(int state, int mode) const {
  int v = state;
  for (int i = 0; i < mode; ++i) v /= n_max_ + 1;
  return v % (n_max_ + 1);
}

int FockOperatorSet::total_occupancy(int state) const {
  int total = 0;
  for (int m = 0; m < mode_count(); ++m) total += occupancy(state, m);
  return total;
}

int FockOperatorSet::one_photon_state(int mode) const {
  int w = 1;
  for (int i = 0; i < mode; ++i) w *= n_max_ + 1;
  return w;
}

Eigen::MatrixXcd FockOperatorSet::restrict_to_safe(
    const Eigen::MatrixXcd& op) const {
  const int m = static_cast<int>(safe_states_.size());
  Eigen::MatrixXcd out(m, m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      out(r, c) = op(safe_states_[r], safe_states_[c]);
    }
  }
  return out;
}

FockOperatorSet build_fock_set(std::vector<FockMode> modes, int n_max,
                               const PhysicalConstants& constants) {
  return FockOperatorSet(std::move(modes), n_max, constants);
}

double commutator_norm(const FockOperatorSet& set, std::string_view which) {
  const Eigen::MatrixXcd* a = nullptr;
  const Eigen::MatrixXcd* b = nullptr;
  Eigen::MatrixXcd number;
  if (which == "energy_dyn") {
    a = &set.h_energy();
    b = &set.h_dyn();
  } else if (which == "dyn_number") {
    number = set.number_operator();
    a = &set.h_dyn();
    b = &number;
  } else if (which == "annihilator_pair") {
    if (set.mode_count() < 2) {
      throw std::invalid_argument("commutator_norm: need two modes");
    }
    a = &set.annihilator(0);
    b = &set.annihilator(1);
  } else {
    throw std::invalid_argument("commutator_norm: unknown tag '" +
                                std::string(which) + "'");
  }
  // All observables here are sparse in the occupation basis; the products
  // stay cheap even at the 4096-state cap.
  using Sparse = Eigen::SparseMatrix<std::complex<double>>;
  const Sparse as = a->sparseView();
  const Sparse bs = b->sparseView();
  const Eigen::MatrixXcd comm =
      set.restrict_to_safe(Eigen::MatrixXcd(Sparse(as * bs) - Sparse(bs * as)));
  const double scale = a->norm() * b->norm();
  return scale > 0.0 ? comm.norm() / scale : comm.norm();
}

double commutation_defect(const FockOperatorSet& set, int mode,
                          int mode_prime) {
  const Eigen::MatrixXcd& a = set.annihilator(mode);
  const Eigen::MatrixXcd ad = set.creator(mode_prime);
  Eigen::MatrixXcd comm = a * ad - ad * a;
  if (mode == mode_prime) {
    comm -= Eigen::MatrixXcd::Identity(set.dimension(), set.dimension());
  }
  return set.restrict_to_safe(comm).cwiseAbs().maxCoeff();
}

double heisenberg_shift_deviation(const FockOperatorSet& set, int mode,
                                  double t) {
  const int dim = set.dimension();
  const std::complex<double> iunit(0.0, 1.0);
  Eigen::VectorXcd phase(dim);
  for (int state = 0; state < dim; ++state) {
    phase[state] = std::exp(iunit * set.h_dyn()(state, state).real() * t /
                            set.constants().hbar);
  }
  // H_dyn is diagonal, so U = e^{-i H t/hbar} is the diagonal phase matrix.
  const Eigen::MatrixXcd transported = phase.asDiagonal() *
                                       set.annihilator(mode) *
                                       phase.conjugate().asDiagonal();
  const double sck = direction_sign(set.modes()[mode].s) * set.constants().c *
                     set.modes()[mode].k;
  const Eigen::MatrixXcd expected =
      std::exp(-iunit * sck * t) * set.annihilator(mode);
  return (transported - expected).cwiseAbs().maxCoeff();
}

double h_energy_min_eigenvalue_relative(const FockOperatorSet& set) {
  const Eigen::MatrixXcd block = set.restrict_to_safe(set.h_energy());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
  const auto& values = solver.eigenvalues();
  const double largest = std::max(std::abs(values.minCoeff()),
                                  std::abs(values.maxCoeff()));
  return largest > 0.0 ? values.minCoeff() / largest : values.minCoeff();
}

FieldMomentOracle::FieldMomentOracle(const Grid& grid, Direction s,
                                     Polarization lambda,
                                     const PhysicalConstants& constants,
                                     int max_total_occupancy)
    : grid_(grid),
      s_(s),
      lambda_(lambda),
      constants_(constants),
      max_total_(max_total_occupancy) {
  if (grid_.n() > 16) {
    throw std::invalid_argument("FieldMomentOracle: grid larger than 16 sites");
  }
  if (max_total_ < 2) {
    throw std::invalid_argument(
        "FieldMomentOracle: need total occupancy >= 2 for field moments");
  }
  const double scale =
      constants_.hbar /
      (constants_.area * constants_.epsilon * std::numbers::pi * constants_.c);
  fourier_kernel_ = (scale * grid_.wavenumbers().abs()).sqrt();

  // Basis of mode multisets with total occupancy <= cap: vacuum, |m>,
  // |m <= m'>, ...
  basis_.push_back({});
  const int n = grid_.n();
  for (int m = 0; m < n; ++m) basis_.push_back({m});
  if (max_total_ >= 2) {
    for (int m = 0; m < n; ++m) {
      for (int mp = m; mp < n; ++mp) basis_.push_back({m, mp});
    }
  }
}

Eigen::MatrixXcd FieldMomentOracle::field_matrix(int site) const {
  const int dim = dimension();
  const int n = grid_.n();
  const double x = grid_.positions()[site];
  const std::complex<double> iunit(0.0, 1.0);

  // E(x) = sum_m h_m b_m + h.c. with h_m = (c/2) sqrt(dk) R~(k_m) e^{i k_m x}.
  std::vector<std::complex<double>> h(n);
  for (int m = 0; m < n; ++m) {
    h[m] = 0.5 * constants_.c * std::sqrt(grid_.dk()) * fourier_kernel_[m] *
           std::exp(iunit * grid_.wavenumbers()[m] * x);
  }

  // Annihilation amplitude between multiset states: <state - m| b_m |state>
  // = sqrt(count of m in state).
  auto state_index = [&](const std::vector<int>& multiset) {
    if (multiset.empty()) return 0;
    if (multiset.size() == 1) return 1 + multiset[0];
    const int a = multiset[0], b = multiset[1];  // a <= b
    // offset of pair block plus position inside the triangular listing
    int idx = 1 + n;
    idx += a * n - a * (a - 1) / 2 + (b - a);
    return idx;
  };

  Eigen::MatrixXcd field = Eigen::MatrixXcd::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const std::vector<int>& state = basis_[col];
    for (size_t pos = 0; pos < state.size(); ++pos) {
      const int m = state[pos];
      if (pos > 0 && state[pos] == state[pos - 1]) continue;
      const int count =
          static_cast<int>(std::count(state.begin(), state.end(), m));
      std::vector<int> lowered = state;
      lowered.erase(std::find(lowered.begin(), lowered.end(), m));
      const int row = state_index(lowered);
      field(row, col) += h[m] * std::sqrt(double(count));
    }
  }
  // Hermitian closure adds the creation half.
  Eigen::MatrixXcd full = field + field.adjoint();
  return full;
}

Eigen::VectorXcd FieldMomentOracle::one_photon_vector(
    const WavePacket& packet) const {
  if (packet.grid() != grid_) {
    throw std::invalid_argument("FieldMomentOracle: packet grid mismatch");
  }
  for (int ch = 0; ch < 4; ++ch) {
    if (ch == channel_index(s_, lambda_)) continue;
    if (packet.channel(ch).abs().maxCoeff() > 0.0) {
      throw std::invalid_argument(
          "FieldMomentOracle: packet must live on the oracle channel only");
    }
  }
  const ComplexArray spectrum =
      to_momentum(grid_, packet.channel(s_, lambda_));
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(dimension());
  for (int m = 0; m < grid_.n(); ++m) {
    state[1 + m] = std::sqrt(grid_.dk()) * spectrum[m];
  }
  return state;
}

double FieldMomentOracle::moment(const WavePacket& packet, int site) const {
  const Eigen::MatrixXcd field = field_matrix(site);
  const Eigen::VectorXcd psi = one_photon_vector(packet);
  Eigen::VectorXcd vacuum = Eigen::VectorXcd::Zero(dimension());
  vacuum[0] = 1.0;
  // <E^2> = ||E psi||^2 since E is hermitian; exact on this basis because
  // E couples the one-photon sector only to totals 0 and 2.  The vacuum
  // term is scaled by the packet norm so the subtraction stays homogeneous.
  const double on_packet = (field * psi).squaredNorm();
  const double on_vacuum = (field * vacuum).squaredNorm();
  return on_packet - psi.squaredNorm() * on_vacuum;
}

double FieldMomentOracle::first_moment(const WavePacket& packet,
                                       int site) const {
  const Eigen::MatrixXcd field = field_matrix(site);
  const Eigen::VectorXcd psi = one_photon_vector(packet);
  return (psi.adjoint() * field * psi)(0, 0).real();
}

}  // namespace blipfield
