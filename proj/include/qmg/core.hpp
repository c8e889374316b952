// Dense state representations for small qubit registers.
//
// Basis convention: qubit 0 (player 1) is the most significant bit of a
// basis index, so for four qubits the label |1000> is index 8.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef QMG_MAX_QUBITS
#define QMG_MAX_QUBITS 12
#endif

namespace qmg {

using Complex = std::complex<double>;
using BasisIndex = std::uint64_t;

inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kOracleTol = 1e-10;
inline constexpr int kMaxQubits = QMG_MAX_QUBITS;

/// A parameter outside its declared domain. `field()` names the offender.
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::string field, const std::string& what);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Bit position (counted from the least significant bit) of a qubit.
constexpr int bit_of(int qubit_index, int n_qubits) { return n_qubits - 1 - qubit_index; }

/// 2x2 unitary acting on one qubit, stored row-major.
class LocalUnitary {
 public:
  /// Throws DomainError unless U U^dagger = I within kConstructionTol.
  explicit LocalUnitary(const std::array<Complex, 4>& entries);

  static LocalUnitary identity();

  const std::array<Complex, 4>& entries() const { return m_; }
  Complex operator()(int row, int col) const { return m_[2 * row + col]; }
  Complex determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  LocalUnitary adjoint() const;
  LocalUnitary conjugate() const;

 private:
  friend LocalUnitary operator*(const LocalUnitary&, const LocalUnitary&);
  static std::array<Complex, 4> multiply(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b);
  struct Unchecked {};
  LocalUnitary(const std::array<Complex, 4>& entries, Unchecked) : m_(entries) {}

  std::array<Complex, 4> m_;
};

LocalUnitary operator*(const LocalUnitary& a, const LocalUnitary& b);

class PureState {
 public:
  /// |0...0> on n qubits.
  explicit PureState(int n_qubits);

  /// Takes ownership of the amplitudes; throws if the length is not 2^n or
  /// the vector has zero norm. With `normalize` false the norm must already
  /// be 1 within kConstructionTol.
  PureState(int n_qubits, std::vector<Complex> amplitudes, bool normalize = false);

  static PureState basis(int n_qubits, BasisIndex index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  const Complex& operator[](BasisIndex i) const { return amps_[i]; }

  double norm() const;
  Complex inner(const PureState& other) const;  // <this|other>

 private:
  friend PureState apply_local(const PureState&, const LocalUnitary&, int);
  int n_qubits_;
  std::vector<Complex> amps_;
};

/// Density matrix, row-major 2^n x 2^n.
class MixedState {
 public:
  /// Throws unless the matrix is Hermitian and has unit trace within
  /// kConstructionTol.
  MixedState(int n_qubits, std::vector<Complex> matrix);

  static MixedState from_pure(const PureState& psi);
  static MixedState maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return dim_; }
  Complex operator()(BasisIndex row, BasisIndex col) const { return rho_[row * dim_ + col]; }
  std::span<const Complex> data() const { return rho_; }

  Complex trace() const;
  double max_hermitian_deviation() const;

 private:
  struct Unchecked {};
  MixedState(int n_qubits, std::vector<Complex> matrix, Unchecked);
  friend MixedState apply_local_mixed(const MixedState&, const LocalUnitary&, int);

  int n_qubits_;
  std::size_t dim_;
  std::vector<Complex> rho_;
};

/// (I x ... x u x ... x I)|state>, applied stride-wise on qubit `qubit_index`.
PureState apply_local(const PureState& state, const LocalUnitary& u, int qubit_index);

/// rho -> U rho U^dagger for U acting on one qubit.
MixedState apply_local_mixed(const MixedState& state, const LocalUnitary& u, int qubit_index);

/// Tr[rho P] for the diagonal projector P onto `indices`.
double diagonal_expectation(const PureState& state, std::span<const BasisIndex> indices);
double diagonal_expectation(const MixedState& state, std::span<const BasisIndex> indices);

void check_qubit_count(int n_qubits);

}  // namespace qmg
