#pragma once

#include <cstdint>
#include <vector>

#include "qtrunc/bigint.hpp"
#include "qtrunc/series.hpp"

namespace qtrunc {

/// Exact polynomial in q. Unlike IntSeries it is valid to every order, so it
/// can be embedded into a series of any order without loss.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  BigInt coeff(std::int64_t n) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  /// q^shift * this, truncated at order N.
  IntSeries to_series(Degree N, Degree shift = 0) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;  // no trailing zeros
};

/// Gaussian binomial [n choose k] in the variable q^step, built with
/// [n,k] = [n-1,k-1] + q^{k step}[n-1,k]. Zero outside 0 <= k <= n.
QPolynomial q_binomial(std::int64_t n, std::int64_t k, std::int64_t step = 1);

/// Row [n choose k]_{q^step} for all n in 0..nmax at fixed k.
std::vector<QPolynomial> q_binomial_column(std::int64_t nmax, std::int64_t k, std::int64_t step = 1);

}  // namespace qtrunc
