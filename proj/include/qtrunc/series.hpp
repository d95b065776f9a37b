#pragma once

// Truncated formal power series over arbitrary-precision integers.
//
// An IntSeries of order N knows the coefficients of q^0..q^N exactly and
// nothing beyond. Binary operations take the smaller order of their operands;
// asking for a coefficient past the order throws TruncationError instead of
// returning zero.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "qtrunc/bigint.hpp"
#include "qtrunc/errors.hpp"
#include "qtrunc/report.hpp"

namespace qtrunc {

class IntSeries {
 public:
  /// Zero series known to order `order`.
  explicit IntSeries(Degree order);

  static IntSeries one(Degree order);
  static IntSeries monomial(Degree degree, const BigInt& c, Degree order);
  /// Takes c0..cN; the order is coeffs.size() - 1.
  static IntSeries from_coefficients(std::vector<BigInt> coeffs);

  Degree order() const { return static_cast<Degree>(coeffs_.size()) - 1; }
  const BigInt& coeff(Degree n) const;
  std::span<const BigInt> coefficients() const { return coeffs_; }

  /// Adds c*q^degree; terms above the order are dropped.
  void add_term(Degree degree, const BigInt& c);

  IntSeries truncated(Degree order) const;
  /// Multiplication by q^s, s >= 0. The order is unchanged.
  IntSeries shifted(Degree s) const;
  /// In-place multiplication by (1 - q^e), e >= 1.
  void mul_one_minus(Degree e);
  /// In-place division by (1 - q^e), e >= 1.
  void div_one_minus(Degree e);

  IntSeries& operator+=(const IntSeries& other);
  IntSeries& operator-=(const IntSeries& other);
  IntSeries& operator*=(const BigInt& c);

  bool is_zero() const;
  std::size_t nonzero_count() const;

  friend bool operator==(const IntSeries& a, const IntSeries& b) = default;

 private:
  std::vector<BigInt> coeffs_;
};

IntSeries operator+(const IntSeries& a, const IntSeries& b);
IntSeries operator-(const IntSeries& a, const IntSeries& b);
IntSeries operator-(const IntSeries& a);
/// Cauchy product via the parallel kernel.
IntSeries operator*(const IntSeries& a, const IntSeries& b);

IntSeries add(const IntSeries& a, const IntSeries& b);
IntSeries sub(const IntSeries& a, const IntSeries& b);
IntSeries scale(const IntSeries& a, const BigInt& c);
IntSeries mul(const IntSeries& a, const IntSeries& b);
/// Same product through the serial reference kernel.
IntSeries mul_serial(const IntSeries& a, const IntSeries& b);
IntSeries power(const IntSeries& a, unsigned exponent);

/// Multiplicative inverse; the constant term must be 1 or -1.
IntSeries invert(const IntSeries& a);

/// (q^a; q^step)_inf truncated at order N.
IntSeries pochhammer(Degree a, Degree step, Degree N);
/// (q^a; q^step)_count, the first `count` factors only, truncated at N.
IntSeries pochhammer_finite(Degree a, Degree step, Degree count, Degree N);
/// (q^S, q^{R-S}, q^R; q^R)_inf, requires 1 <= S < R.
IntSeries triple_product(Degree R, Degree S, Degree N);

/// Sum over lo <= j <= hi of (-1)^j weight(j) q^{R j(j+1)/2 - S j}, exponents
/// above N dropped. A missing bound means unbounded on that side. Requires
/// 1 <= S < R so that exponents are nonnegative and increase in |j|.
IntSeries signed_theta_sum(Degree R, Degree S, std::optional<Degree> lo, std::optional<Degree> hi,
                           const std::function<BigInt(Degree)>& weight, Degree N);
/// Full bilateral sum: weight 1, all j.
IntSeries bilateral_theta(Degree R, Degree S, Degree N);

/// sum_{n>=0} q^{nR+S}/(1-q^{nR+S}) - q^{nR+R-S}/(1-q^{nR+R-S}).
IntSeries lambert_diff(Degree R, Degree S, Degree N);

const BigInt& coeff(const IntSeries& a, Degree n);
/// Passes iff coefficients of q^n0..q^N are all >= 0; records the first
/// negative one otherwise.
CheckReport nonneg_from(const IntSeries& a, Degree n0, const std::string& suite = "nonneg");
/// Lists every degree up to the shared order where the two series differ.
CheckReport compare_series(const IntSeries& expected, const IntSeries& actual,
                           const std::string& suite = "equal");

/// [c0, ..., cN] as decimal strings.
nlohmann::json to_json(const IntSeries& a);
IntSeries series_from_json(const nlohmann::json& j);

}  // namespace qtrunc
