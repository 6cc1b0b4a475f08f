#include <doctest.h>

#include <random>

#include <kolchin/numpoly.hpp>

#include "random_inputs.hpp"

using namespace kolchin;

TEST_CASE("extended binomial coefficients") {
  CHECK(binomial(Int(5), 2) == 10);
  CHECK(binomial(Int(1), 3) == 0);  // falling factorial hits zero
  CHECK(binomial(Int(-1), 1) == -1);
  CHECK(binomial(Int(-1), 0) == 1);
  CHECK(binomial(Int(0), 2) == 0);
  CHECK(binomial(Int(-3), 2) == 6);
  CHECK(binomial(Int(7), -1) == 0);
  // no overflow: C(64, 32) does not fit in 64 bits
  CHECK(binomial(Int(64), 32) == Int("1832624140942590534"));
  CHECK(binomial(Int(100), 50) == Int("100891344545564193334812497256"));
}

TEST_CASE("Pascal rule holds for negative upper arguments too") {
  std::mt19937_64 rng(7001);
  std::uniform_int_distribution<int> pick_n(-20, 20);
  std::uniform_int_distribution<int> pick_k(1, 10);
  for (int trial = 0; trial < 500; ++trial) {
    const Int n(pick_n(rng));
    const int k = pick_k(rng);
    CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
  }
}

TEST_CASE("evaluation in the binomial basis") {
  const NumPoly p({Int(1), Int(1)});  // s + 2
  CHECK(p(Int(3)) == 5);
  const NumPoly q({Int(0), Int(0), Int(1)});  // C(s+2, 2)
  CHECK(q(Int(-2)) == 0);
  const NumPoly r({Int(2), Int(2)});  // 2s + 4
  CHECK(r(Int(10)) == 24);
  CHECK(NumPoly()(Int(123)) == 0);
}

TEST_CASE("addition is coefficientwise and canonical") {
  const NumPoly p({Int(1), Int(1)});
  CHECK(p + p == NumPoly({Int(2), Int(2)}));
  CHECK(p + NumPoly() == p);
  // (2s+1) + 1 = 2s+2
  CHECK(NumPoly({Int(-1), Int(2)}) + NumPoly(Int(1)) == NumPoly({Int(0), Int(2)}));
  // cancellation drops the degree
  CHECK(NumPoly({Int(0), Int(3)}) - NumPoly({Int(1), Int(3)}) == NumPoly(Int(-1)));
}

TEST_CASE("shift by one is the suffix-sum map") {
  CHECK(NumPoly({Int(0), Int(1)}).shifted(Int(1)) == NumPoly({Int(1), Int(1)}));
  const NumPoly p({Int(3), Int(-2), Int(5)});
  CHECK(p.shifted(Int(1)).shifted(Int(-1)) == p);
  // s+2 shifted by 2 is s+4
  CHECK(NumPoly({Int(1), Int(1)}).shifted(Int(2)) == NumPoly({Int(3), Int(1)}));
}

TEST_CASE("shift roundtrip and evaluation agreement") {
  std::mt19937_64 rng(7002);
  std::uniform_int_distribution<int> pick_a(-8, 8);
  std::uniform_int_distribution<int> pick_s(-15, 15);
  for (int trial = 0; trial < 300; ++trial) {
    const NumPoly p = testing::random_poly(rng, 8);
    const Int a(pick_a(rng));
    const Int s(pick_s(rng));
    CHECK(p.shifted(a).shifted(-a) == p);
    CHECK(p.shifted(a)(s) == p(s + a));
    // shifting in two hops lands at the same place
    CHECK(p.shifted(a).shifted(Int(1)) == p.shifted(a + 1));
  }
}

TEST_CASE("difference operator") {
  CHECK(NumPoly({Int(0), Int(1), Int(1)}).difference() == NumPoly({Int(1), Int(1)}));
  CHECK(NumPoly(Int(7)).difference() == NumPoly());
  CHECK(NumPoly({Int(1), Int(1)}).difference() == NumPoly(Int(1)));
}

TEST_CASE("difference telescopes") {
  std::mt19937_64 rng(7003);
  for (int trial = 0; trial < 50; ++trial) {
    const NumPoly p = testing::random_poly(rng, 6);
    const NumPoly d = p.difference();
    for (int s = 0; s <= 20; s += 5) {
      Int total(0);
      for (int t = 1; t <= s; ++t) total += d(Int(t));
      CHECK(total == p(Int(s)) - p(Int(0)));
    }
  }
}

TEST_CASE("interpolation from integer samples") {
  CHECK(interpolate(Int(0), {Int(2), Int(3), Int(4)}) == NumPoly({Int(1), Int(1)}));
  CHECK(interpolate(Int(4), {Int(10), Int(12)}) == NumPoly({Int(0), Int(2)}));
  CHECK(interpolate(Int(0), {Int(1), Int(3), Int(6)}) ==
        NumPoly({Int(0), Int(0), Int(1)}));
  CHECK_THROWS_AS(interpolate(Int(0), {}), std::invalid_argument);
}

TEST_CASE("interpolation recovers a sampled polynomial") {
  std::mt19937_64 rng(7004);
  std::uniform_int_distribution<int> pick_base(-10, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const NumPoly p = testing::random_poly(rng, 8);
    const Int base(pick_base(rng));
    std::vector<Int> values;
    for (std::int64_t i = 0; i <= p.degree(); ++i) values.push_back(p(base + i));
    CHECK(interpolate(base, values) == p);
  }
}

TEST_CASE("canonical form and display") {
  CHECK(NumPoly({Int(1), Int(2), Int(0), Int(0)}).degree() == 1);
  CHECK(NumPoly().degree() == 0);
  CHECK(NumPoly().is_zero());
  CHECK(NumPoly().str() == "0");
  CHECK(NumPoly({Int(3), Int(-2), Int(5)}).str() ==
        "5*C(s+2,2) - 2*C(s+1,1) + 3");
  CHECK(NumPoly({Int(0), Int(0), Int(1)}).str() == "C(s+2,2)");
  CHECK(NumPoly::from_standard({Int(2), Int(3)}).standard() ==
        std::vector<Int>{Int(2), Int(3)});
}
