#include <doctest.h>

#include "oracles.hpp"
#include "qtrunc/qbinomial.hpp"

using namespace qtrunc;

namespace {

QPolynomial poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return QPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("q_binomial basics") {
  for (int n = 0; n <= 6; ++n) CHECK(q_binomial(n, 0) == poly({1}));
  CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(q_binomial(2, 5).is_zero());
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(4, 2, 3) == poly({1, 0, 0, 1, 0, 0, 2, 0, 0, 1, 0, 0, 1}));
}

TEST_CASE("q_binomial against subset enumeration") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto expected = oracle::gaussian_by_subsets(n, k);
      const auto got = q_binomial(n, k);
      CHECK(got.degree() == k * (n - k));
      for (std::size_t d = 0; d < expected.size(); ++d) CHECK(got.coeff(static_cast<std::int64_t>(d)) == static_cast<long>(expected[d]));
    }
  }
}

TEST_CASE("column agrees with single evaluations") {
  const auto column = q_binomial_column(10, 3, 2);
  for (int n = 0; n <= 10; ++n) CHECK(column[static_cast<std::size_t>(n)] == q_binomial(n, 3, 2));
}

TEST_CASE("to_series truncates and shifts") {
  const auto s = q_binomial(4, 2).to_series(3, 1);
  CHECK(s.order() == 3);
  CHECK(s.coeff(0) == 0);
  CHECK(s.coeff(1) == 1);
  CHECK(s.coeff(3) == 2);
}
