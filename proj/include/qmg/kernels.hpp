// Inner loops of the simulator. Each kernel has a serial reference version
// and an OpenMP version; they must agree to rounding. The dispatching entry
// points pick the OpenMP version above `kParallelThreshold` amplitudes.

#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "qmg/core.hpp"

namespace qmg::kernels {

inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

using Matrix2 = std::array<Complex, 4>;

namespace serial {

/// In-place 2x2 update of every amplitude pair differing only in `bit`.
void apply_1q(std::span<Complex> amps, int bit, const Matrix2& u);

/// Sum of |amps[i]|^2 over the given indices.
double sum_probabilities(std::span<const Complex> amps, std::span<const BasisIndex> indices);

/// Sum of Re(rho[i,i]) over the given indices of a dim x dim matrix.
double sum_diagonal(std::span<const Complex> rho, std::size_t dim, std::span<const BasisIndex> indices);

}  // namespace serial

namespace parallel {

void apply_1q(std::span<Complex> amps, int bit, const Matrix2& u);
double sum_probabilities(std::span<const Complex> amps, std::span<const BasisIndex> indices);
double sum_diagonal(std::span<const Complex> rho, std::size_t dim, std::span<const BasisIndex> indices);

}  // namespace parallel

void apply_1q(std::span<Complex> amps, int bit, const Matrix2& u);
double sum_probabilities(std::span<const Complex> amps, std::span<const BasisIndex> indices);
double sum_diagonal(std::span<const Complex> rho, std::size_t dim, std::span<const BasisIndex> indices);

}  // namespace qmg::kernels
