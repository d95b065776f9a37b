#include "qtrunc/kernels.hpp"

#include <algorithm>
#include <vector>

namespace qtrunc::kernels {

namespace {

// Indices of nonzero entries of the sparser operand, limited to `len`.
std::vector<std::size_t> support(std::span<const BigInt> v, std::size_t len) {
  std::vector<std::size_t> idx;
  const std::size_t end = std::min(len, v.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (sgn(v[i]) != 0) idx.push_back(i);
  }
  return idx;
}

void accumulate(std::span<const std::size_t> sparse_idx, std::span<const BigInt> sparse,
                std::span<const BigInt> dense, std::size_t n, BigInt& acc) {
  acc = 0;
  for (std::size_t i : sparse_idx) {
    if (i > n) break;
    const std::size_t j = n - i;
    if (j >= dense.size()) continue;
    mpz_addmul(acc.get_mpz_t(), sparse[i].get_mpz_t(), dense[j].get_mpz_t());
  }
}

}  // namespace

void mul_serial(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out) {
  const std::size_t len = out.size();
  auto ia = support(a, len);
  auto ib = support(b, len);
  const bool a_sparse = ia.size() <= ib.size();
  const auto& idx = a_sparse ? ia : ib;
  auto sparse = a_sparse ? a : b;
  auto dense = a_sparse ? b : a;
  for (std::size_t n = 0; n < len; ++n) accumulate(idx, sparse, dense, n, out[n]);
}

void mul_parallel(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out) {
  const std::size_t len = out.size();
  auto ia = support(a, len);
  auto ib = support(b, len);
  const bool a_sparse = ia.size() <= ib.size();
  const auto& idx = a_sparse ? ia : ib;
  auto sparse = a_sparse ? a : b;
  auto dense = a_sparse ? b : a;
  const long count = static_cast<long>(len);
#pragma omp parallel for schedule(dynamic, 8) if (len >= kParallelThreshold)
  for (long n = 0; n < count; ++n) {
    accumulate(idx, sparse, dense, static_cast<std::size_t>(n), out[static_cast<std::size_t>(n)]);
  }
}

}  // namespace qtrunc::kernels
