#include <doctest.h>

#include "qtrunc/bijections.hpp"
#include "qtrunc/errors.hpp"

using namespace qtrunc;

TEST_CASE("phi on small cases") {
  const auto a = phi(IndexedPartition::make(Partition({3, 1}), 0, 4));
  CHECK(a.case_id == 2);
  CHECK(a.image.lambda == Partition({2}));
  CHECK(a.image.j == 1);

  const auto b = phi(IndexedPartition::make(Partition({2}), 1, 4));
  CHECK(b.case_id == 1);
  CHECK(b.image.lambda == Partition({3, 1}));
  CHECK(b.image.j == 0);

  const auto c = phi(IndexedPartition::make(Partition(), -1, 1));
  CHECK(c.image.lambda == Partition({1}));
  CHECK(c.image.j == 0);
  const auto back = phi(c.image);
  CHECK(back.case_id == 1);
  CHECK(back.image.lambda.empty());
  CHECK(back.image.j == -1);

  // Empty partition with positive index: single part 3j - 1.
  const auto d = phi(IndexedPartition::make(Partition(), 2, gpn(2)));
  CHECK(d.image.lambda == Partition({5}));
  CHECK(d.image.j == 1);
}

TEST_CASE("phi rejects bad input") {
  CHECK_THROWS_AS(phi({Partition(), 0, 0}), ParameterError);
  CHECK_THROWS_AS(IndexedPartition::make(Partition({2}), 0, 3), ParameterError);
  CHECK_THROWS_AS(phi({Partition({2}), 0, 3}), ParameterError);
}

TEST_CASE("phi is a parity-flipping involution with A-set exchange") {
  CHECK(verify_phi(1).pass());
  for (std::int64_t n = 1; n <= 25; ++n) {
    const auto r = verify_phi(n);
    CAPTURE(n);
    CHECK(r.pass());
  }
  CHECK_THROWS_AS(verify_phi(0), ParameterError);
}

TEST_CASE("phi boundary at n = gpn(j)") {
  for (std::int64_t j : {-4, -3, -2, -1, 1, 2, 3, 4}) {
    const std::int64_t n = gpn(j);
    const IndexedPartition x{Partition(), j, n};
    const auto once = phi(x);
    CHECK(once.image.lambda.weight() == n - gpn(once.image.j));
    CHECK(phi(once.image).image == x);
  }
}

TEST_CASE("psi reproduces the worked example") {
  CHECK(psi(Partition({2, 2, 1, 1, 1, 1, 1, 1}), 2) == Partition({11, 2}));
  CHECK(psi(Partition({2, 1, 1, 1, 1, 1, 1, 1, 1}), 2) == Partition({12, 1}));
  CHECK(psi(Partition(std::vector<int>(10, 1)), 2) == Partition({13}));
  CHECK_THROWS_AS(psi(Partition({3, 1}), 1), ParameterError);
  CHECK_THROWS_AS(psi(Partition(), 1), ParameterError);
}

TEST_CASE("psi weight shift and injectivity") {
  for (int k = 1; k <= 4; ++k) {
    CHECK(2 * k - 1 == gpn(-k) - gpn(k - 1));
    for (std::int64_t n = 1; n <= 30; ++n) {
      for (const auto& lam : set_A(1, -k, n)) CHECK(psi(lam, k).weight() == lam.weight() + 2 * k - 1);
      CHECK(verify_psi(n, k).pass());
    }
  }
  const auto r = verify_psi(15, 2);
  CHECK(r.pass());
  CHECK(r.values()[0].second == "3");
  CHECK(r.values()[1].second == "21");
  // Empty source: vacuous pass.
  CHECK(set_A(1, -4, 10).empty());
  CHECK(verify_psi(10, 4).pass());
}
