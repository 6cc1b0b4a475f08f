#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <kolchin/bigint.hpp>

namespace kolchin {

// Binomial coefficient extended to every integer upper argument by the
// falling factorial: n (n-1) ... (n-k+1) / k!. For n >= k >= 0 this is the
// factorial formula, for 0 <= n < k it is 0, and for negative n it is the
// value of the degree-k polynomial C(x, k) at x = n. k < 0 yields 0.
Int binomial(const Int& n, std::int64_t k);

// A numerical polynomial: integer values at every integer argument. Such a
// polynomial is uniquely p(s) = sum_i a_i * C(s+i, i) with integer a_i; we
// store exactly those coefficients, coeffs()[i] being a_i. Canonical form:
// the top coefficient is nonzero, except the zero polynomial which is the
// single entry (0). Immutable after construction; all operations are pure.
class NumPoly {
 public:
  NumPoly() : a_{Int(0)} {}
  explicit NumPoly(Int constant) : a_{std::move(constant)} {}
  explicit NumPoly(std::vector<Int> ascending);
  NumPoly(std::initializer_list<Int> ascending);

  // From the display order (a_d, ..., a_0). Leading zeros are stripped.
  static NumPoly from_standard(const std::vector<Int>& descending);

  // The basis element C(s+i, i).
  static NumPoly basis(std::int64_t i);

  const std::vector<Int>& coeffs() const { return a_; }  // a_0 .. a_d
  std::vector<Int> standard() const;                     // a_d .. a_0

  // Degree of the zero polynomial is 0 by convention.
  std::int64_t degree() const { return static_cast<std::int64_t>(a_.size()) - 1; }
  const Int& leading() const { return a_.back(); }
  bool is_zero() const { return a_.size() == 1 && a_[0] == 0; }

  // a_i, or 0 beyond the degree.
  Int coeff(std::int64_t i) const;

  // Exact evaluation at any integer.
  Int operator()(const Int& s) const;

  // p(s) -> p(s + amount). Closed form on the coefficients:
  // a'_j = sum_{i>=j} a_i * C(amount + i - j - 1, i - j),
  // which is the suffix-sum (hockey stick) map when amount = 1 and its
  // inverse when amount = -1. Cost O(d^2) for any amount.
  NumPoly shifted(const Int& amount) const;

  // The backward difference p(s) - p(s-1); drops a_0 and lowers each
  // remaining coefficient one basis index.
  NumPoly difference() const;

  NumPoly scaled(const Int& factor) const;

  NumPoly operator-() const;
  friend NumPoly operator+(const NumPoly& p, const NumPoly& q);
  friend NumPoly operator-(const NumPoly& p, const NumPoly& q);
  bool operator==(const NumPoly&) const = default;

  // "2*C(s+1,1) + 3", zero terms suppressed, "0" for the zero polynomial.
  std::string str() const;

 private:
  std::vector<Int> a_;
  void normalize();
};

// The unique polynomial of degree <= values.size()-1 taking
// values[i] at base + i. Built from integer forward differences in the
// C(s - base, i) basis and re-expressed in the standard basis by shifts.
NumPoly interpolate(const Int& base, const std::vector<Int>& values);

std::ostream& operator<<(std::ostream& os, const NumPoly& p);

}  // namespace kolchin
