#pragma once

// The sign-reversing involution phi on pairs (partition, pentagonal
// index) and the conjugation-based injection psi from A_{-k}^(1)(n) into
// A_{k-1}^(2)(n), together with exhaustive checkers for both.

#include <cstdint>

#include "qtrunc/partitions.hpp"
#include "qtrunc/report.hpp"

namespace qtrunc {

/// A partition of n - gpn(j) tagged with its index j and ambient weight n.
struct IndexedPartition {
  Partition lambda;
  std::int64_t j = 0;
  std::int64_t n = 0;

  /// Throws ParameterError unless weight(lambda) == n - gpn(j).
  static IndexedPartition make(Partition lambda, std::int64_t j, std::int64_t n);

  friend bool operator==(const IndexedPartition&, const IndexedPartition&) = default;
};

struct PhiResult {
  IndexedPartition image;
  int case_id = 0;  ///< 1 if t + 3j >= largest part, else 2
};

/// Case 1 (t+3j >= l1): (t+3j-1, l1-1, ..., lt-1) at index j-1, zeros dropped.
/// Case 2 (t+3j <  l1): (l2+1, ..., lt+1, 1^{l1-t-3j-1}) at index j+1.
/// On the empty partition: (3j-1) at j-1 for j >= 1 and 1^{-3j-2} at j+1 for
/// j <= -1. (empty, 0) is rejected.
PhiResult phi(const IndexedPartition& x);

/// (l1' + 2k - 1, l2', ..., ls') where l' is the conjugate of lambda.
/// Requires rank(lambda) <= -3k, which forces lambda to be nonempty.
Partition psi(const Partition& lambda, int k);

/// Exhaustive check of phi over every (lambda, j) with lambda in P(n - gpn(j)):
/// involution, index parity flip, weight bookkeeping and A-set exchange.
CheckReport verify_phi(std::int64_t n);

/// psi maps every element of A_{-k}^(1)(n) to a distinct element of
/// A_{k-1}^(2)(n).
CheckReport verify_psi(std::int64_t n, int k);

}  // namespace qtrunc
