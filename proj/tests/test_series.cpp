#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qtrunc/partitions.hpp"
#include "qtrunc/series.hpp"

using namespace qtrunc;

namespace {

IntSeries from_ints(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntSeries::from_coefficients(std::move(v));
}

IntSeries from_poly(const oracle::Poly& p) {
  std::vector<BigInt> v;
  for (long long x : p) v.push_back(big(x));
  return IntSeries::from_coefficients(std::move(v));
}

IntSeries random_series(std::mt19937& rng, Degree order, bool unit = false) {
  std::uniform_int_distribution<long> coef(-50, 50);
  std::vector<BigInt> v;
  for (Degree i = 0; i <= order; ++i) v.emplace_back(coef(rng));
  if (unit) v[0] = (rng() & 1) ? 1 : -1;
  return IntSeries::from_coefficients(std::move(v));
}

}  // namespace

TEST_CASE("add, sub and scale") {
  CHECK(add(from_ints({1, -1, 0}), from_ints({0, 1, 0})) == from_ints({1, 0, 0}));
  CHECK(scale(from_ints({1, 1}), BigInt(0)).is_zero());
  const auto a = from_ints({3, -4, 5, 7});
  CHECK(sub(a, a).is_zero());
  CHECK(sub(a, a).order() == 3);
}

TEST_CASE("results take the smaller order") {
  const auto a = IntSeries::one(10);
  const auto b = IntSeries::one(4);
  CHECK((a + b).order() == 4);
  CHECK((a * b).order() == 4);
  CHECK(scale(a, BigInt(3)).order() == 10);
}

TEST_CASE("coefficients beyond the order are unknown, not zero") {
  const auto s = from_ints({1, -1});
  CHECK(coeff(s, 1) == -1);
  CHECK_THROWS_AS(coeff(s, 2), TruncationError);
  CHECK_THROWS_AS(nonneg_from(s, 5), TruncationError);
}

TEST_CASE("mul") {
  // (1-q)(1+q+q^2+q^3) = 1 - q^4, truncated at order 3 leaves 1.
  CHECK(mul(from_ints({1, -1, 0, 0}), from_ints({1, 1, 1, 1})) == from_ints({1, 0, 0, 0}));
  const auto a = from_ints({2, 0, -3, 8});
  CHECK(mul(a, IntSeries::one(3)) == a);
  const auto e = pochhammer(1, 1, 10);
  CHECK(mul(e, invert(e)) == IntSeries::one(10));
}

TEST_CASE("ring laws on random instances") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 25; ++trial) {
    const Degree order = 5 + static_cast<Degree>(rng() % 30);
    const auto a = random_series(rng, order);
    const auto b = random_series(rng, order);
    const auto c = random_series(rng, order + static_cast<Degree>(rng() % 5));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
  }
}

TEST_CASE("invert") {
  CHECK(invert(from_ints({1, -1, 0, 0})) == from_ints({1, 1, 1, 1}));
  CHECK_THROWS_AS(invert(from_ints({2, 1})), ParameterError);
  CHECK_THROWS_AS(invert(from_ints({0, 1})), ParameterError);

  // 1/(q;q) against exhaustive enumeration.
  const auto p = invert(pochhammer(1, 1, 5));
  for (int n = 0; n <= 5; ++n) CHECK(p.coeff(n) == big(oracle::count_partitions(n)));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 1 + static_cast<Degree>(rng() % 25), true);
    const auto inv = invert(a);
    CHECK(mul(a, inv) == IntSeries::one(a.order()));
    CHECK(mul(inv, a) == IntSeries::one(a.order()));
    CHECK(invert(inv) == a);
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(1, 1, 7) == from_ints({1, -1, -1, 0, 0, 1, 0, 1}));
  CHECK(pochhammer(9, 2, 8) == IntSeries::one(8));
  // (q^2;q^2) to order 6, oracle multiplies the three factors in full.
  CHECK(pochhammer(2, 2, 6) == from_poly(oracle::product_of_factors({2, 4, 6}, 6)));
  CHECK(pochhammer(2, 2, 6).coeff(6) == 0);
  CHECK(pochhammer_finite(1, 1, 3, 10) == from_poly(oracle::product_of_factors({1, 2, 3}, 10)));
  CHECK_THROWS_AS(pochhammer(0, 1, 5), ParameterError);
}

TEST_CASE("triple_product") {
  for (Degree N = 0; N <= 30; ++N) CHECK(triple_product(3, 1, N) == pochhammer(1, 1, N));
  // (q;q^2)^2 (q^2;q^2) = 1 - 2q + 2q^4 - ..., factor by factor.
  const auto tp = triple_product(2, 1, 4);
  CHECK(tp == from_poly(oracle::product_of_factors({1, 1, 2, 3, 3, 4}, 4)));
  CHECK(tp == from_ints({1, -2, 0, 0, 2}));
  for (Degree R = 2; R <= 6; ++R) {
    for (Degree S = 1; S < R; ++S) CHECK(triple_product(R, S, 20).coeff(0) == 1);
  }
  CHECK_THROWS_AS(triple_product(3, 3, 10), ParameterError);
  CHECK_THROWS_AS(triple_product(3, 0, 10), ParameterError);
}

TEST_CASE("bilateral_theta") {
  CHECK(bilateral_theta(3, 1, 7) == from_ints({1, -1, -1, 0, 0, 1, 0, 1}));
  for (Degree R = 2; R <= 8; ++R) {
    for (Degree S = 1; S < R; ++S) CHECK(bilateral_theta(R, S, 0) == IntSeries::one(0));
  }
  for (Degree N : {0, 1, 17, 200}) CHECK(bilateral_theta(3, 1, N) == pochhammer(1, 1, N));
}

TEST_CASE("specialized Jacobi triple product for 1 <= S < R <= 8, N = 200") {
  for (Degree R = 2; R <= 8; ++R) {
    for (Degree S = 1; S < R; ++S) {
      CAPTURE(R);
      CAPTURE(S);
      CHECK(triple_product(R, S, 200) == bilateral_theta(R, S, 200));
    }
  }
}

TEST_CASE("signed_theta_sum honours finite ranges") {
  // j = -1, 0 with weight j: only j = -1 contributes, (+1) q^{S}.
  const auto s = signed_theta_sum(3, 1, -1, 0, [](Degree j) { return big(j); }, 5);
  CHECK(s == from_ints({0, 1, 0, 0, 0, 0}));
  const auto empty = signed_theta_sum(3, 1, 1000, 2000, [](Degree) { return BigInt(1); }, 50);
  CHECK(empty.is_zero());
}

TEST_CASE("lambert_diff") {
  const auto l = lambert_diff(3, 1, 7);
  const long expected[] = {1, 0, 1, 1, 0, 0, 2};
  CHECK(l.coeff(0) == 0);
  for (int m = 1; m <= 7; ++m) CHECK(l.coeff(m) == expected[m - 1]);
  CHECK(lambert_diff(2, 1, 60).is_zero());
  for (Degree R = 2; R <= 7; ++R) {
    for (Degree S = 1; S < R; ++S) {
      const auto s = lambert_diff(R, S, 80);
      for (Degree m = 1; m <= 80; ++m) {
        CHECK(s.coeff(m) == big(oracle::divisor_residue_diff(m, R, S)));
        CHECK(s.coeff(m) == divisor_diff(m, R, S));
      }
    }
  }
}

TEST_CASE("nonneg_from") {
  CHECK(nonneg_from(invert(pochhammer(1, 1, 20)), 0).pass());
  const auto r = nonneg_from(from_ints({1, -1}), 0);
  REQUIRE_FALSE(r.pass());
  CHECK(r.violations().front().n == 1);
  CHECK(nonneg_from(from_ints({-1, 2}), 1).pass());
}

TEST_CASE("JSON serialization round-trips exactly") {
  const auto big_series = invert(pochhammer(1, 1, 450));  // p(450) needs > 64 bits
  CHECK(big_series.coeff(450) > BigInt("18446744073709551615"));
  const auto j = to_json(big_series);
  CHECK(j.size() == 451);
  CHECK(j[5] == "7");
  CHECK(series_from_json(j) == big_series);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::array({"1", "x"})), ParameterError);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::array()), ParameterError);
}
