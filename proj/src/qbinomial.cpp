#include "qtrunc/qbinomial.hpp"

#include <algorithm>

#include "qtrunc/errors.hpp"

namespace qtrunc {

namespace {

void trim(std::vector<BigInt>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

// a + q^shift * b
std::vector<BigInt> add_shifted(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                                std::int64_t shift) {
  std::vector<BigInt> out = a;
  if (b.empty()) return out;
  const std::size_t need = b.size() + static_cast<std::size_t>(shift);
  if (out.size() < need) out.resize(need);
  for (std::size_t i = 0; i < b.size(); ++i) out[i + static_cast<std::size_t>(shift)] += b[i];
  trim(out);
  return out;
}

}  // namespace

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

BigInt QPolynomial::coeff(std::int64_t n) const {
  if (n < 0 || n > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(n)];
}

IntSeries QPolynomial::to_series(Degree N, Degree shift) const {
  IntSeries out(N);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Degree d = static_cast<Degree>(i) + shift;
    if (d > N) break;
    out.add_term(d, coeffs_[i]);
  }
  return out;
}

std::vector<QPolynomial> q_binomial_column(std::int64_t nmax, std::int64_t k, std::int64_t step) {
  if (step < 1) throw ParameterError("q_binomial needs step >= 1");
  std::vector<QPolynomial> column;
  if (nmax < 0) return column;
  // prev[i] holds [n-1 choose i] for i = 0..k while sweeping n upward.
  std::vector<std::vector<BigInt>> prev;
  if (k >= 0) prev.assign(static_cast<std::size_t>(k) + 1, {});
  for (std::int64_t n = 0; n <= nmax; ++n) {
    if (k < 0) {
      column.emplace_back();
      continue;
    }
    std::vector<std::vector<BigInt>> cur(prev.size());
    cur[0] = {BigInt(1)};
    for (std::int64_t i = 1; i <= std::min(n, k); ++i) {
      const auto idx = static_cast<std::size_t>(i);
      cur[idx] = add_shifted(prev[idx - 1], prev[idx], i * step);
    }
    column.emplace_back(cur[static_cast<std::size_t>(k)]);
    prev = std::move(cur);
  }
  return column;
}

QPolynomial q_binomial(std::int64_t n, std::int64_t k, std::int64_t step) {
  if (step < 1) throw ParameterError("q_binomial needs step >= 1");
  if (n < 0 || k < 0 || k > n) return QPolynomial();
  return q_binomial_column(n, k, step).back();
}

}  // namespace qtrunc
