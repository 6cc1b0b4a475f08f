#include <doctest.h>

#include <algorithm>
#include <random>

#include <kolchin/lattice.hpp>
#include <kolchin/macaulay.hpp>

#include "random_inputs.hpp"

using namespace kolchin;

namespace {

ExponentSet adjoin(const ExponentSet& E, const Point& e) {
  std::vector<Point> rows = E.rows;
  rows.push_back(e);
  return ExponentSet(E.m, std::move(rows));
}

}  // namespace

TEST_CASE("construction validates rows") {
  CHECK_THROWS_AS(ExponentSet(2, {{1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(ExponentSet(2, {{1, -2}}), std::invalid_argument);
  CHECK_NOTHROW(ExponentSet(2, {}));
}

TEST_CASE("minimal elements form the defining antichain") {
  const ExponentSet E(2, {{1, 0}, {2, 0}, {1, 2}});
  CHECK(minimal_elements(E).rows == std::vector<Point>{{1, 0}});
  CHECK(minimal_elements(ExponentSet(2, {})).rows.empty());
  const ExponentSet incomparable(2, {{2, 1}, {1, 2}});
  CHECK(minimal_elements(incomparable).rows == std::vector<Point>{{1, 2}, {2, 1}});
  // duplicates collapse
  CHECK(minimal_elements(ExponentSet(1, {{3}, {3}})).rows == std::vector<Point>{{3}});
}

TEST_CASE("counting oracle on small sets") {
  CHECK(count_free_points(ExponentSet(2, {{1, 1}}), 2) == 5);
  CHECK(count_free_points(ExponentSet(2, {}), 3) == 10);
  CHECK(count_free_points(ExponentSet(2, {{0, 0}}), 5) == 0);
  CHECK(count_free_points(ExponentSet(2, {{1, 1}}), -1) == 0);
  CHECK(count_free_points(ExponentSet(1, {{4}}), 100) == 4);
}

TEST_CASE("counting refuses to blow the budget") {
  const ExponentSet E(3, {{2, 2, 2}});
  CHECK_THROWS_AS(count_free_points(E, 1000, 100000), ResourceError);
  CHECK_THROWS_AS(dimension_polynomial(E, 10), ResourceError);
}

TEST_CASE("stabilization bound is the sum of column maxima") {
  CHECK(stabilization_bound(ExponentSet(2, {{1, 2}, {2, 1}})) == 4);
  CHECK(stabilization_bound(ExponentSet(1, {{5}})) == 5);
  CHECK(stabilization_bound(ExponentSet(3, {})) == 0);
  const ExponentSet E(2, {{1, 2}, {2, 1}});
  const NumPoly w = dimension_polynomial(E);
  for (std::int64_t s = stabilization_bound(E); s <= stabilization_bound(E) + 5; ++s)
    CHECK(w(Int(s)) == count_free_points(E, s));
}

TEST_CASE("dimension polynomial by verified interpolation") {
  CHECK(dimension_polynomial(ExponentSet(2, {{1, 2}, {2, 1}})) ==
        NumPoly::from_standard({Int(2), Int(0)}));  // 2s+2
  CHECK(dimension_polynomial(ExponentSet(2, {{1, 1}})) ==
        NumPoly::from_standard({Int(2), Int(-1)}));  // 2s+1
  CHECK(dimension_polynomial(ExponentSet(3, {})) == NumPoly::basis(3));
  CHECK(dimension_polynomial(ExponentSet(2, {{0, 0}})) == NumPoly());
}

TEST_CASE("algebraic recursion matches") {
  CHECK(dimension_polynomial_rec(ExponentSet(2, {{2, 0}, {1, 2}})) ==
        NumPoly::from_standard({Int(1), Int(2)}));  // s+3
  CHECK(dimension_polynomial_rec(ExponentSet(2, {{1, 2}, {2, 1}})) ==
        NumPoly::from_standard({Int(2), Int(0)}));
  CHECK(dimension_polynomial_rec(ExponentSet(1, {{4}})) == NumPoly(Int(4)));
  CHECK(dimension_polynomial_rec(ExponentSet(2, {})) == NumPoly::basis(2));
  CHECK(dimension_polynomial_rec(ExponentSet(2, {{0, 0}})) == NumPoly());
}

TEST_CASE("inclusion-exclusion matches") {
  // C(s+2,2) - C(s,2) = 2s+1
  CHECK(dimension_polynomial_ie(ExponentSet(2, {{1, 1}})) ==
        NumPoly::from_standard({Int(2), Int(-1)}));
  // C(s+2,2) - 2 C(s-1,2) + C(s-2,2) = 2s+2
  CHECK(dimension_polynomial_ie(ExponentSet(2, {{1, 2}, {2, 1}})) ==
        NumPoly::from_standard({Int(2), Int(0)}));
  CHECK(dimension_polynomial_ie(ExponentSet(2, {})) == NumPoly::basis(2));
}

TEST_CASE("inclusion-exclusion refuses subset blowup") {
  std::vector<Point> rows;
  for (std::int64_t i = 0; i <= 21; ++i) rows.push_back({i, 21 - i});
  CHECK_THROWS_AS(dimension_polynomial_ie(ExponentSet(2, std::move(rows))),
                  ResourceError);
}

TEST_CASE("the three algorithms and the oracle agree on random sets") {
  std::mt19937_64 rng(9001);
  for (int trial = 0; trial < 60; ++trial) {
    const ExponentSet E = testing::random_set(rng);
    const NumPoly w = dimension_polynomial(E);
    CHECK(w == dimension_polynomial_rec(E));
    CHECK(w == dimension_polynomial_ie(E));
    const std::int64_t bound = stabilization_bound(E);
    for (std::int64_t s = bound; s <= bound + 5; ++s)
      CHECK(w(Int(s)) == count_free_points(E, s));
    CHECK(is_kolchin(w));
  }
}

TEST_CASE("counting decomposition against an adjoined point") {
  std::mt19937_64 rng(9002);
  std::uniform_int_distribution<int> pick_s(0, 8);
  for (int trial = 0; trial < 150; ++trial) {
    const ExponentSet E = testing::random_set(rng);
    const Point e = testing::random_point(rng, E.m);
    const std::int64_t s = pick_s(rng);
    const Int lhs = count_free_points(E, s);
    const Int rhs = count_free_points(minimal_elements(adjoin(E, e)), s) +
                    count_free_points(colon(E, e), s - order_of(e));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("counting is monotone") {
  std::mt19937_64 rng(9003);
  std::uniform_int_distribution<int> pick_s(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const ExponentSet E = testing::random_set(rng);
    const Point e = testing::random_point(rng, E.m);
    const std::int64_t s = pick_s(rng);
    CHECK(count_free_points(E, s) <= count_free_points(E, s + 1));
    CHECK(count_free_points(adjoin(E, e), s) <= count_free_points(E, s));
    CHECK(count_free_points(E, s) <= binomial(Int(s) + E.m, E.m));
  }
}

TEST_CASE("normalization, row order, and coordinate order do not matter") {
  std::mt19937_64 rng(9004);
  for (int trial = 0; trial < 40; ++trial) {
    const ExponentSet E = testing::random_set(rng);
    const NumPoly w = dimension_polynomial(E);
    CHECK(dimension_polynomial(minimal_elements(E)) == w);

    std::vector<Point> shuffled = E.rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(dimension_polynomial(ExponentSet(E.m, shuffled)) == w);

    std::vector<std::size_t> perm(static_cast<std::size_t>(E.m));
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Point> permuted;
    for (const Point& r : E.rows) {
      Point g(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) g[k] = r[perm[k]];
      permuted.push_back(std::move(g));
    }
    CHECK(dimension_polynomial(ExponentSet(E.m, permuted)) == w);
  }
}

TEST_CASE("single points of equal order share a polynomial") {
  for (std::int64_t m = 1; m <= 3; ++m) {
    for (std::int64_t d = 0; d <= 4; ++d) {
      Point first(static_cast<std::size_t>(m), 0);
      first[0] = d;
      const NumPoly w = dimension_polynomial(ExponentSet(m, {first}));
      Point last(static_cast<std::size_t>(m), 0);
      last.back() = d;
      CHECK(dimension_polynomial(ExponentSet(m, {last})) == w);
    }
  }
}
