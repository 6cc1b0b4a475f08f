#pragma once

#include <compare>
#include <vector>

#include <kolchin/numpoly.hpp>

namespace kolchin {

// Minimizing coefficients (b_d, ..., b_0) of a numerical polynomial,
// indexed high to low. b_d always equals the leading standard coefficient.
struct MinimizingCoeffs {
  std::vector<Int> b;
  bool operator==(const MinimizingCoeffs&) const = default;
};

// Macaulay constants (c_{d+1}, ..., c_1), high index first, in the
// original numbering: c_i = sum_{j=i-1}^{d} b_j. c_0 is never stored; it
// is only meaningful for a concrete exponent set (see stabilization_bound).
struct MacaulayConstants {
  std::vector<Int> c;
  bool operator==(const MacaulayConstants&) const = default;
};

// Peels the leading coefficient, re-centers, and recurses:
//   b_d = a_d,   v(s) = p(s + a_d) - C(s+d+1+a_d, d+1) + C(s+d+1, d+1),
// then b(p) = (a_d, 0, ..., 0, b(v)) with zeros padding the gap down to
// deg v. Total on all numerical polynomials; constants give (a_0).
MinimizingCoeffs minimizing_coefficients(const NumPoly& p);

// Suffix partial sums of b, high index first: c_{d+1} = b_d, ...,
// c_1 = b_d + ... + b_0.
MacaulayConstants macaulay_constants(const MinimizingCoeffs& b);
MacaulayConstants macaulay_constants(const NumPoly& p);

// Inverse of the chain above:
//   p(s) = C(s+d+1, d+1) - 1 - sum_{i=1}^{d+1} C(s+i-1-c_i, i),
// the constant 1 being the i = 0 term, whose c_0 is irrelevant.
// reconstruct(macaulay_constants(minimizing_coefficients(p))) == p.
NumPoly reconstruct(const MacaulayConstants& c);

// Membership in W, the set of Kolchin dimension polynomials: true iff
// every minimizing coefficient is non-negative.
bool is_kolchin(const NumPoly& p);

// Equivalent criterion on the constants: 0 <= c_{d+1} <= c_d <= ... <= c_1.
// The leading bound encodes b_d >= 0.
bool macaulay_nondecreasing(const NumPoly& p);

// The Sit order: lexicographic comparison of minimizing-coefficient
// vectors, high index first, the shorter vector left-padded with zeros.
// On W this is eventual pointwise comparison; equivalent iff p == q.
std::strong_ordering sit_compare(const NumPoly& p, const NumPoly& q);

}  // namespace kolchin
