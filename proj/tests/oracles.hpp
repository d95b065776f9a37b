#pragma once

// Independent brute-force oracles used only by the tests. Nothing here calls
// into the library's series or partition code.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;

/// Schoolbook product truncated to degree N.
inline Poly multiply(const Poly& a, const Poly& b, int N) {
  Poly out(static_cast<std::size_t>(N) + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(N); ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(N); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// prod over the given exponents of (1 - q^e), each factor multiplied in full.
inline Poly product_of_factors(const std::vector<int>& exponents, int N) {
  Poly acc(static_cast<std::size_t>(N) + 1, 0);
  acc[0] = 1;
  for (int e : exponents) {
    Poly factor(static_cast<std::size_t>(e) + 1, 0);
    factor[0] = 1;
    factor[static_cast<std::size_t>(e)] = -1;
    acc = multiply(acc, factor, N);
  }
  return acc;
}

/// Visits every partition of n (parts <= maxpart) as a non-increasing vector.
inline void partitions(int n, int maxpart, std::vector<int>& prefix,
                       const std::function<void(const std::vector<int>&)>& visit) {
  if (n == 0) {
    visit(prefix);
    return;
  }
  for (int part = std::min(n, maxpart); part >= 1; --part) {
    prefix.push_back(part);
    partitions(n - part, part, prefix, visit);
    prefix.pop_back();
  }
}

inline void partitions(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> prefix;
  partitions(n, n, prefix, visit);
}

inline long long count_partitions(int n) {
  long long c = 0;
  partitions(n, [&](const std::vector<int>&) { ++c; });
  return c;
}

inline long long count_if(int n, const std::function<bool(const std::vector<int>&)>& pred) {
  long long c = 0;
  partitions(n, [&](const std::vector<int>& p) { c += pred(p) ? 1 : 0; });
  return c;
}

/// Trial division over every d in 1..n.
inline long long divisor_residue_diff(long long n, long long R, long long S) {
  long long diff = 0;
  for (long long d = 1; d <= n; ++d) {
    if (n % d) continue;
    if (d % R == S) ++diff;
    if (d % R == R - S) --diff;
  }
  return diff;
}

/// Number of k-subsets of {1..n} with element sum k(k+1)/2 + d, for every d.
inline Poly gaussian_by_subsets(int n, int k) {
  if (k < 0 || k > n) return {};
  Poly out(static_cast<std::size_t>(k * (n - k)) + 1, 0);
  const int base = k * (k + 1) / 2;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int sum = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) sum += i + 1;
    }
    ++out[static_cast<std::size_t>(sum - base)];
  }
  return out;
}

}  // namespace oracle
