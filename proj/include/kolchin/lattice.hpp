#pragma once

#include <cstdint>
#include <vector>

#include <kolchin/errors.hpp>
#include <kolchin/numpoly.hpp>

namespace kolchin {

// A lattice point in N_0^m: the exponent vector of one leading derivative.
using Point = std::vector<std::int64_t>;

std::int64_t order_of(const Point& p);

// Componentwise e <= x.
bool leq(const Point& e, const Point& x);

// A finite subset E of N_0^m given as rows. Rows may be listed in any
// order and may contain duplicates or dominated points; every quantity
// computed from E is invariant under those.
struct ExponentSet {
  std::int64_t m = 0;
  std::vector<Point> rows;

  ExponentSet() = default;
  // Throws std::invalid_argument on a row of the wrong width or a
  // negative entry.
  ExponentSet(std::int64_t m, std::vector<Point> rows);

  bool operator==(const ExponentSet&) const = default;
};

inline constexpr std::int64_t kDefaultBudget = 100'000'000;

// The antichain of componentwise-minimal rows, deduplicated and sorted
// lexicographically. Defines the same free set as E.
ExponentSet minimal_elements(const ExponentSet& E);

// E : e, rows mapped by truncated subtraction max(f - e, 0). The points
// above e in the free set of E correspond one to one, via x -> x - e, to
// the free set of E : e; truncation is what makes that bijection exact.
ExponentSet colon(const ExponentSet& E, const Point& e);

// Ground truth for everything else: the number of x in N_0^m with
// ord x <= s dominating no row of E, by direct enumeration. s < 0 counts
// as 0. Refuses with ResourceError when C(s+m, m) exceeds the budget.
Int count_free_points(const ExponentSet& E, std::int64_t s,
                      std::int64_t budget = kDefaultBudget);

// Sum over coordinates of the columnwise maximum of the rows (0 for the
// empty set). For every s at or above this bound the counting function
// agrees with the dimension polynomial.
std::int64_t stabilization_bound(const ExponentSet& E);

// The Kolchin dimension polynomial of E, by sampling the count at the
// m+1 points starting at the stabilization bound of the normalized set,
// interpolating, and verifying the result on three held-out points.
// Throws CrossCheckError if verification fails (that is a bug, not an
// input condition) and propagates the oracle's ResourceError.
NumPoly dimension_polynomial(const ExponentSet& E,
                             std::int64_t budget = kDefaultBudget);

// Same polynomial by the purely algebraic decomposition
//   w_E = w_{E u e} + w_{E:e}(s - 1),  e a unit vector,
// with no enumeration. The pivot is the first positive coordinate of the
// lexicographically smallest row of maximal order.
NumPoly dimension_polynomial_rec(const ExponentSet& E);

// Same polynomial by inclusion-exclusion over subsets J of the
// normalized rows: sum of (-1)^|J| C(s + m - ord w_J, m), w_J the
// componentwise maximum. Refuses more than 20 rows (ResourceError).
NumPoly dimension_polynomial_ie(const ExponentSet& E);

enum class Method { interpolation, recursion, inclusion_exclusion };

NumPoly dimension_polynomial(Method method, const ExponentSet& E,
                             std::int64_t budget = kDefaultBudget);

}  // namespace kolchin
