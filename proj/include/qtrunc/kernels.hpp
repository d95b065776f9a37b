#pragma once

// Dense truncated-product kernels. Both variants compute
//   out[n] = sum_{i+j=n} a[i] * b[j],  0 <= n < out.size()
// and must agree exactly; the serial one is the reference the parallel one
// is tested and benchmarked against.

#include <cstddef>
#include <span>

#include "qtrunc/bigint.hpp"

namespace qtrunc::kernels {

void mul_serial(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out);

/// OpenMP version, parallel over output degrees. Falls back to a single
/// thread below `kParallelThreshold` output coefficients.
void mul_parallel(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out);

inline constexpr std::size_t kParallelThreshold = 96;

}  // namespace qtrunc::kernels
