#pragma once

// Integer partitions and the statistics built on them: p(n), Dyson's rank,
// conjugation, rank-filtered sets A_j^(1)/A_j^(2), M_k(n), generalized
// pentagonal numbers and divisor-count differences.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtrunc/bigint.hpp"

namespace qtrunc {

/// Non-increasing sequence of positive parts. The empty partition is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws ParameterError unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  /// Number of parts, t.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Largest part, 0 for the empty partition.
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// "(5,3,1,1)"; the empty partition prints as "()".
std::string to_string(const Partition& p);
/// [5,3,1,1]
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

/// Calls `visit` on every partition of n in lexicographically decreasing
/// order, starting at (n). n = 0 visits the empty partition once.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate(int n);

/// p(n) by the pentagonal recurrence; 0 for negative n. Memoized behind a
/// mutex, safe to call from several threads.
BigInt p_euler(std::int64_t n);
/// p(0..nmax), computed locally without the shared memo.
std::vector<BigInt> partition_numbers(std::int64_t nmax);

/// Largest part minus number of parts; rank of the empty partition is 0.
int rank(const Partition& p);
Partition conjugate(const Partition& p);

/// Generalized pentagonal number j(3j+1)/2.
std::int64_t gpn(std::int64_t j);

/// A_j^(1)(n) (variant 1, rank <= 3j) or A_j^(2)(n) (variant 2, rank > 3j),
/// both drawn from P(n - gpn(j)). Requires n >= 1.
std::vector<Partition> set_A(int variant, std::int64_t j, std::int64_t n);
std::size_t set_A_size(int variant, std::int64_t j, std::int64_t n);
/// True iff p lies in A_j^(variant)(n).
bool in_set_A(int variant, std::int64_t j, std::int64_t n, const Partition& p);

/// M_k(n) by brute-force filtering of P(n): k is not a part, every 1..k-1 is,
/// and parts > k outnumber parts < k (counted with multiplicity).
std::uint64_t m_k(int k, int n);

/// Number of divisors of n congruent to S mod R minus those congruent to R-S.
std::int64_t divisor_diff(std::int64_t n, std::int64_t R, std::int64_t S);

/// Coefficients 0..N of 1/(q^S, q^{R-S}, q^R; q^R)_inf.
std::vector<BigInt> product_counts(std::int64_t R, std::int64_t S, std::int64_t N);
/// Coefficients 0..N of 1/(q;q)_inf^3 (3-colored partitions).
std::vector<BigInt> t_counts(std::int64_t N);

}  // namespace qtrunc
