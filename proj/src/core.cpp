#include "qmg/core.hpp"

#include <cmath>
#include <numeric>

#include "qmg/kernels.hpp"

namespace qmg {

DomainError::DomainError(std::string field, const std::string& what)
    : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw DomainError("n_qubits", "must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                                      std::to_string(n_qubits));
  }
}

namespace {

void check_qubit_index(int qubit_index, int n_qubits) {
  if (qubit_index < 0 || qubit_index >= n_qubits) {
    throw std::out_of_range("qubit index " + std::to_string(qubit_index) + " out of range for " +
                            std::to_string(n_qubits) + " qubits");
  }
}

void check_indices(std::span<const BasisIndex> indices, std::size_t dim) {
  for (BasisIndex i : indices) {
    if (i >= dim) {
      throw std::out_of_range("basis index " + std::to_string(i) + " out of range for dimension " +
                              std::to_string(dim));
    }
  }
}

}  // namespace

// LocalUnitary

LocalUnitary::LocalUnitary(const std::array<Complex, 4>& entries) : m_(entries) {
  for (const Complex& z : m_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("unitary", "non-finite entry");
    }
  }
  const std::array<Complex, 4> product = multiply(m_, adjoint().m_);
  const std::array<Complex, 4> eye{1.0, 0.0, 0.0, 1.0};
  for (int k = 0; k < 4; ++k) {
    if (std::abs(product[k] - eye[k]) > kConstructionTol) {
      throw DomainError("unitary", "U U^dagger deviates from identity");
    }
  }
}

LocalUnitary LocalUnitary::identity() { return LocalUnitary({1.0, 0.0, 0.0, 1.0}, Unchecked{}); }

LocalUnitary LocalUnitary::adjoint() const {
  return LocalUnitary({std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])}, Unchecked{});
}

LocalUnitary LocalUnitary::conjugate() const {
  return LocalUnitary({std::conj(m_[0]), std::conj(m_[1]), std::conj(m_[2]), std::conj(m_[3])}, Unchecked{});
}

std::array<Complex, 4> LocalUnitary::multiply(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
  std::array<Complex, 4> r{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r[2 * i + j] = a[2 * i] * b[j] + a[2 * i + 1] * b[2 + j];
  }
  return r;
}

LocalUnitary operator*(const LocalUnitary& a, const LocalUnitary& b) {
  return LocalUnitary(LocalUnitary::multiply(a.m_, b.m_), LocalUnitary::Unchecked{});
}

// PureState

PureState::PureState(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
  amps_[0] = 1.0;
}

PureState::PureState(int n_qubits, std::vector<Complex> amplitudes, bool normalize)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("amplitude vector length " + std::to_string(amps_.size()) +
                                " does not match 2^" + std::to_string(n_qubits));
  }
  for (const Complex& z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("non-finite amplitude");
    }
  }
  const double nrm = norm();
  if (normalize) {
    if (nrm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    for (Complex& z : amps_) z /= nrm;
  } else if (std::abs(nrm - 1.0) > kConstructionTol) {
    throw std::invalid_argument("state is not normalized (norm " + std::to_string(nrm) + ")");
  }
}

PureState PureState::basis(int n_qubits, BasisIndex index) {
  PureState s(n_qubits);
  if (index >= s.dimension()) {
    throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double PureState::norm() const {
  double sum = 0.0;
  for (const Complex& z : amps_) sum += std::norm(z);
  return std::sqrt(sum);
}

Complex PureState::inner(const PureState& other) const {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("inner product of mismatched registers");
  Complex sum{};
  for (std::size_t i = 0; i < amps_.size(); ++i) sum += std::conj(amps_[i]) * other.amps_[i];
  return sum;
}

// MixedState

MixedState::MixedState(int n_qubits, std::vector<Complex> matrix, Unchecked)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits), rho_(std::move(matrix)) {}

MixedState::MixedState(int n_qubits, std::vector<Complex> matrix) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  dim_ = std::size_t{1} << n_qubits;
  if (matrix.size() != dim_ * dim_) {
    throw std::invalid_argument("density matrix has " + std::to_string(matrix.size()) + " entries, expected " +
                                std::to_string(dim_ * dim_));
  }
  rho_ = std::move(matrix);
  if (max_hermitian_deviation() > kConstructionTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(trace() - 1.0) > kConstructionTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
}

MixedState MixedState::from_pure(const PureState& psi) {
  const std::size_t dim = psi.dimension();
  std::vector<Complex> rho(dim * dim);
  const auto a = psi.amplitudes();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) rho[r * dim + c] = a[r] * std::conj(a[c]);
  }
  return MixedState(psi.n_qubits(), std::move(rho), Unchecked{});
}

MixedState MixedState::maximally_mixed(int n_qubits) {
  check_qubit_count(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<Complex> rho(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) rho[i * dim + i] = 1.0 / static_cast<double>(dim);
  return MixedState(n_qubits, std::move(rho), Unchecked{});
}

Complex MixedState::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += rho_[i * dim_ + i];
  return t;
}

double MixedState::max_hermitian_deviation() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      worst = std::max(worst, std::abs(rho_[r * dim_ + c] - std::conj(rho_[c * dim_ + r])));
    }
  }
  return worst;
}

// Operations

PureState apply_local(const PureState& state, const LocalUnitary& u, int qubit_index) {
  check_qubit_index(qubit_index, state.n_qubits());
  PureState out = state;
  kernels::apply_1q(out.amps_, bit_of(qubit_index, state.n_qubits()), u.entries());
  return out;
}

MixedState apply_local_mixed(const MixedState& state, const LocalUnitary& u, int qubit_index) {
  const int n = state.n_qubits();
  check_qubit_index(qubit_index, n);
  // Row-major rho viewed as a 2n-qubit vector: row bits sit above column bits.
  std::vector<Complex> rho = state.rho_;
  const int col_bit = bit_of(qubit_index, n);
  kernels::apply_1q(rho, n + col_bit, u.entries());
  kernels::apply_1q(rho, col_bit, u.conjugate().entries());
  return MixedState(n, std::move(rho), MixedState::Unchecked{});
}

double diagonal_expectation(const PureState& state, std::span<const BasisIndex> indices) {
  check_indices(indices, state.dimension());
  return kernels::sum_probabilities(state.amplitudes(), indices);
}

double diagonal_expectation(const MixedState& state, std::span<const BasisIndex> indices) {
  check_indices(indices, state.dimension());
  return kernels::sum_diagonal(state.data(), state.dimension(), indices);
}

}  // namespace qmg
