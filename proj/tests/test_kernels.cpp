#include <doctest.h>

#include <omp.h>

#include <random>

#include "qtrunc/kernels.hpp"
#include "qtrunc/series.hpp"

using namespace qtrunc;

namespace {

std::vector<BigInt> random_coeffs(std::mt19937_64& rng, std::size_t len, double density) {
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  std::vector<BigInt> v(len);
  for (auto& x : v) {
    if (keep(rng) < density) {
      x = big(static_cast<std::int64_t>(rng() >> 1));
      x *= x;  // exceed 64 bits
      if (rng() & 1) x = -x;
    }
  }
  return v;
}

}  // namespace

TEST_CASE("parallel product matches the serial reference") {
  std::mt19937_64 rng(99);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (std::size_t len : {1u, 7u, 95u, 96u, 300u}) {
      for (double density : {1.0, 0.1}) {
        const auto a = random_coeffs(rng, len, density);
        const auto b = random_coeffs(rng, len + 3, 1.0);
        std::vector<BigInt> serial(len), parallel(len);
        kernels::mul_serial(a, b, serial);
        kernels::mul_parallel(a, b, parallel);
        CHECK(serial == parallel);
      }
    }
  }
}

TEST_CASE("series product routes agree") {
  const auto inv = invert(pochhammer(1, 1, 400));
  const auto theta = bilateral_theta(5, 2, 400);
  CHECK(mul(inv, theta) == mul_serial(inv, theta));
  CHECK(mul(theta, inv) == mul_serial(inv, theta));
}

TEST_CASE("output shorter than inputs truncates") {
  std::vector<BigInt> a{1, 1, 1, 1}, b{1, 1, 1, 1}, out(3);
  kernels::mul_parallel(a, b, out);
  CHECK(out == std::vector<BigInt>{1, 2, 3});
}
