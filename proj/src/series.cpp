#include "qtrunc/series.hpp"

#include <algorithm>
#include <string>

#include "qtrunc/kernels.hpp"

namespace qtrunc {

namespace {

void require_order(Degree order) {
  if (order < 0) throw ParameterError("series order must be nonnegative, got " + std::to_string(order));
}

void require_theta_params(Degree R, Degree S) {
  if (!(1 <= S && S < R)) {
    throw ParameterError("need 1 <= S < R, got R=" + std::to_string(R) + " S=" + std::to_string(S));
  }
}

}  // namespace

IntSeries::IntSeries(Degree order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

IntSeries IntSeries::one(Degree order) {
  IntSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

IntSeries IntSeries::monomial(Degree degree, const BigInt& c, Degree order) {
  IntSeries s(order);
  s.add_term(degree, c);
  return s;
}

IntSeries IntSeries::from_coefficients(std::vector<BigInt> coeffs) {
  if (coeffs.empty()) throw ParameterError("a series needs at least the constant coefficient");
  IntSeries s(0);
  s.coeffs_ = std::move(coeffs);
  return s;
}

const BigInt& IntSeries::coeff(Degree n) const {
  if (n < 0 || n > order()) {
    throw TruncationError("coefficient of q^" + std::to_string(n) + " is beyond the series order " +
                          std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

void IntSeries::add_term(Degree degree, const BigInt& c) {
  if (degree < 0) throw ParameterError("negative exponent " + std::to_string(degree));
  if (degree > order()) return;
  coeffs_[static_cast<std::size_t>(degree)] += c;
}

IntSeries IntSeries::truncated(Degree order) const {
  require_order(order);
  if (order > this->order()) {
    throw TruncationError("cannot extend a series of order " + std::to_string(this->order()) +
                          " to order " + std::to_string(order));
  }
  return from_coefficients({coeffs_.begin(), coeffs_.begin() + order + 1});
}

IntSeries IntSeries::shifted(Degree s) const {
  if (s < 0) throw ParameterError("negative shift " + std::to_string(s));
  IntSeries out(order());
  for (Degree n = order(); n >= s; --n) {
    out.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n - s)];
  }
  return out;
}

void IntSeries::mul_one_minus(Degree e) {
  if (e < 1) throw ParameterError("factor (1 - q^e) needs e >= 1");
  for (Degree n = order(); n >= e; --n) {
    coeffs_[static_cast<std::size_t>(n)] -= coeffs_[static_cast<std::size_t>(n - e)];
  }
}

void IntSeries::div_one_minus(Degree e) {
  if (e < 1) throw ParameterError("factor (1 - q^e) needs e >= 1");
  for (Degree n = e; n <= order(); ++n) {
    coeffs_[static_cast<std::size_t>(n)] += coeffs_[static_cast<std::size_t>(n - e)];
  }
}

IntSeries& IntSeries::operator+=(const IntSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

IntSeries& IntSeries::operator-=(const IntSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

IntSeries& IntSeries::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool IntSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

std::size_t IntSeries::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& x) { return sgn(x) != 0; }));
}

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
  IntSeries out = a;
  out += b;
  return out;
}

IntSeries operator-(const IntSeries& a, const IntSeries& b) {
  IntSeries out = a;
  out -= b;
  return out;
}

IntSeries operator-(const IntSeries& a) { return scale(a, BigInt(-1)); }

IntSeries operator*(const IntSeries& a, const IntSeries& b) { return mul(a, b); }

IntSeries add(const IntSeries& a, const IntSeries& b) { return a + b; }
IntSeries sub(const IntSeries& a, const IntSeries& b) { return a - b; }

IntSeries scale(const IntSeries& a, const BigInt& c) {
  IntSeries out = a;
  out *= c;
  return out;
}

IntSeries mul(const IntSeries& a, const IntSeries& b) {
  IntSeries out(std::min(a.order(), b.order()));
  std::vector<BigInt> buf(static_cast<std::size_t>(out.order()) + 1);
  kernels::mul_parallel(a.coefficients(), b.coefficients(), buf);
  return IntSeries::from_coefficients(std::move(buf));
}

IntSeries mul_serial(const IntSeries& a, const IntSeries& b) {
  std::vector<BigInt> buf(static_cast<std::size_t>(std::min(a.order(), b.order())) + 1);
  kernels::mul_serial(a.coefficients(), b.coefficients(), buf);
  return IntSeries::from_coefficients(std::move(buf));
}

IntSeries power(const IntSeries& a, unsigned exponent) {
  IntSeries out = IntSeries::one(a.order());
  for (unsigned i = 0; i < exponent; ++i) out = mul(out, a);
  return out;
}

IntSeries invert(const IntSeries& a) {
  const BigInt& c0 = a.coeff(0);
  if (!(c0 == 1 || c0 == -1)) {
    throw ParameterError("cannot invert a series whose constant term is " + to_string(c0) +
                         " (must be 1 or -1)");
  }
  const auto src = a.coefficients();
  std::vector<std::size_t> support;
  for (std::size_t i = 1; i < src.size(); ++i) {
    if (sgn(src[i]) != 0) support.push_back(i);
  }
  std::vector<BigInt> out(src.size());
  out[0] = c0;
  BigInt acc;
  for (std::size_t n = 1; n < src.size(); ++n) {
    acc = 0;
    for (std::size_t i : support) {
      if (i > n) break;
      mpz_addmul(acc.get_mpz_t(), src[i].get_mpz_t(), out[n - i].get_mpz_t());
    }
    // b_n = -c0^{-1} * acc and c0^{-1} = c0.
    out[n] = -c0 * acc;
  }
  return IntSeries::from_coefficients(std::move(out));
}

IntSeries pochhammer(Degree a, Degree step, Degree N) {
  if (a < 1 || step < 1) throw ParameterError("pochhammer needs a >= 1 and step >= 1");
  IntSeries out = IntSeries::one(N);
  for (Degree e = a; e <= N; e += step) out.mul_one_minus(e);
  return out;
}

IntSeries pochhammer_finite(Degree a, Degree step, Degree count, Degree N) {
  if (a < 1 || step < 1) throw ParameterError("pochhammer needs a >= 1 and step >= 1");
  IntSeries out = IntSeries::one(N);
  Degree e = a;
  for (Degree i = 0; i < count && e <= N; ++i, e += step) out.mul_one_minus(e);
  return out;
}

IntSeries triple_product(Degree R, Degree S, Degree N) {
  require_theta_params(R, S);
  IntSeries out = IntSeries::one(N);
  for (Degree e = S; e <= N; e += R) out.mul_one_minus(e);
  for (Degree e = R - S; e <= N; e += R) out.mul_one_minus(e);
  for (Degree e = R; e <= N; e += R) out.mul_one_minus(e);
  return out;
}

IntSeries signed_theta_sum(Degree R, Degree S, std::optional<Degree> lo, std::optional<Degree> hi,
                           const std::function<BigInt(Degree)>& weight, Degree N) {
  require_theta_params(R, S);
  IntSeries out(N);
  auto exponent = [&](Degree j) -> __int128 {
    const __int128 jj = j;
    return static_cast<__int128>(R) * jj * (jj + 1) / 2 - static_cast<__int128>(S) * jj;
  };
  auto add = [&](Degree j) {
    BigInt w = weight(j);
    if (j % 2 != 0) w = -w;
    out.add_term(static_cast<Degree>(exponent(j)), w);
  };
  // Exponents grow strictly with |j| on each side of 0.
  const Degree pos_start = lo ? std::max<Degree>(*lo, 0) : 0;
  for (Degree j = pos_start; (!hi || j <= *hi) && exponent(j) <= N; ++j) add(j);
  const Degree neg_start = hi ? std::min<Degree>(*hi, -1) : -1;
  for (Degree j = neg_start; (!lo || j >= *lo) && exponent(j) <= N; --j) add(j);
  return out;
}

IntSeries bilateral_theta(Degree R, Degree S, Degree N) {
  return signed_theta_sum(R, S, std::nullopt, std::nullopt, [](Degree) { return BigInt(1); }, N);
}

IntSeries lambert_diff(Degree R, Degree S, Degree N) {
  require_theta_params(R, S);
  IntSeries out(N);
  auto spread = [&](Degree base, int sign) {
    for (Degree e = base; e <= N; e += R) {
      for (Degree m = e; m <= N; m += e) out.add_term(m, BigInt(sign));
    }
  };
  spread(S, +1);
  spread(R - S, -1);
  return out;
}

const BigInt& coeff(const IntSeries& a, Degree n) { return a.coeff(n); }

CheckReport nonneg_from(const IntSeries& a, Degree n0, const std::string& suite) {
  if (n0 < 0 || n0 > a.order()) {
    throw TruncationError("nonnegativity start " + std::to_string(n0) + " is beyond the series order");
  }
  CheckReport report(suite);
  for (Degree n = n0; n <= a.order(); ++n) {
    if (sgn(a.coeff(n)) < 0) {
      report.add_violation({"coefficient of q^" + std::to_string(n), ">= 0", to_string(a.coeff(n)), n});
      break;
    }
  }
  return report;
}

CheckReport compare_series(const IntSeries& expected, const IntSeries& actual, const std::string& suite) {
  CheckReport report(suite);
  const Degree order = std::min(expected.order(), actual.order());
  for (Degree n = 0; n <= order; ++n) {
    if (expected.coeff(n) != actual.coeff(n)) {
      report.add_violation({"coefficient of q^" + std::to_string(n), to_string(expected.coeff(n)),
                            to_string(actual.coeff(n)), n});
    }
  }
  return report;
}

nlohmann::json to_json(const IntSeries& a) {
  auto out = nlohmann::json::array();
  for (const auto& c : a.coefficients()) out.push_back(to_string(c));
  return out;
}

IntSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParameterError("series JSON must be a nonempty array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw ParameterError("series coefficients must be decimal strings");
    try {
      coeffs.push_back(from_string(item.get<std::string>()));
    } catch (const std::invalid_argument&) {
      throw ParameterError("malformed coefficient '" + item.get<std::string>() + "'");
    }
  }
  return IntSeries::from_coefficients(std::move(coeffs));
}

}  // namespace qtrunc
