#include "qmg/kernels.hpp"

#include <cstdint>

namespace qmg::kernels {

namespace {

// Index of the k-th pair's |..0..> member: insert a zero at position `bit`.
inline std::size_t pair_base(std::size_t k, int bit) {
  const std::size_t low = k & ((std::size_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

inline void update_pair(Complex& a0, Complex& a1, const Matrix2& u) {
  const Complex v0 = a0;
  const Complex v1 = a1;
  a0 = u[0] * v0 + u[1] * v1;
  a1 = u[2] * v0 + u[3] * v1;
}

}  // namespace

namespace serial {

void apply_1q(std::span<Complex> amps, int bit, const Matrix2& u) {
  const std::size_t stride = std::size_t{1} << bit;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t j = base; j < base + stride; ++j) {
      update_pair(amps[j], amps[j + stride], u);
    }
  }
}

double sum_probabilities(std::span<const Complex> amps, std::span<const BasisIndex> indices) {
  double total = 0.0;
  for (BasisIndex i : indices) total += std::norm(amps[i]);
  return total;
}

double sum_diagonal(std::span<const Complex> rho, std::size_t dim, std::span<const BasisIndex> indices) {
  double total = 0.0;
  for (BasisIndex i : indices) total += rho[i * dim + i].real();
  return total;
}

}  // namespace serial

namespace parallel {

void apply_1q(std::span<Complex> amps, int bit, const Matrix2& u) {
  const std::size_t stride = std::size_t{1} << bit;
  const auto pairs = static_cast<std::int64_t>(amps.size() / 2);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::size_t j = pair_base(static_cast<std::size_t>(k), bit);
    update_pair(data[j], data[j + stride], u);
  }
}

double sum_probabilities(std::span<const Complex> amps, std::span<const BasisIndex> indices) {
  double total = 0.0;
  const auto count = static_cast<std::int64_t>(indices.size());
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t k = 0; k < count; ++k) total += std::norm(amps[indices[k]]);
  return total;
}

double sum_diagonal(std::span<const Complex> rho, std::size_t dim, std::span<const BasisIndex> indices) {
  double total = 0.0;
  const auto count = static_cast<std::int64_t>(indices.size());
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t k = 0; k < count; ++k) {
    const BasisIndex i = indices[k];
    total += rho[i * dim + i].real();
  }
  return total;
}

}  // namespace parallel

void apply_1q(std::span<Complex> amps, int bit, const Matrix2& u) {
  if (amps.size() >= kParallelThreshold) {
    parallel::apply_1q(amps, bit, u);
  } else {
    serial::apply_1q(amps, bit, u);
  }
}

double sum_probabilities(std::span<const Complex> amps, std::span<const BasisIndex> indices) {
  return indices.size() >= kParallelThreshold ? parallel::sum_probabilities(amps, indices)
                                              : serial::sum_probabilities(amps, indices);
}

double sum_diagonal(std::span<const Complex> rho, std::size_t dim, std::span<const BasisIndex> indices) {
  return indices.size() >= kParallelThreshold ? parallel::sum_diagonal(rho, dim, indices)
                                              : serial::sum_diagonal(rho, dim, indices);
}

}  // namespace qmg::kernels
