#pragma once

#include <optional>
#include <vector>

#include <kolchin/lattice.hpp>
#include <kolchin/macaulay.hpp>

namespace kolchin {

// A system of differential equations reduced to what the dimension theory
// consumes: one exponent set of leading derivatives per differential
// indeterminate, all over the same m derivations. The input is assumed
// already reduced (a characteristic / Groebner presentation).
struct DifferentialSystem {
  std::int64_t m = 0;
  std::vector<ExponentSet> sets;

  DifferentialSystem() = default;
  // Throws std::invalid_argument when sets is empty or a member has a
  // different dimension.
  DifferentialSystem(std::int64_t m, std::vector<ExponentSet> sets);
};

// The differential dimension polynomial: the sum of the members'
// Kolchin polynomials.
NumPoly system_dimension_polynomial(const DifferentialSystem& sys,
                                    std::int64_t budget = kDefaultBudget);

// C(s+m, m) - C(s+m-d, m): the dimension polynomial of any single point
// of order d in N_0^m, and the minimal dimension polynomial of the
// general component of a single equation of order d.
NumPoly single_equation_poly(std::int64_t m, std::int64_t d);

// Facts needed to recognize a single-equation minimal polynomial:
// the Macaulay constants are all equal (and non-negative) and the degree
// is m - 1. When both hold, order is the common constant, i.e. the order
// of the defining equation.
struct MinimalCandidate {
  bool constant_macaulay = false;
  bool degree_matches = false;
  std::optional<Int> order;
};

MinimalCandidate classify_minimal_candidate(const NumPoly& p, std::int64_t m);

// Rows i = 1..m with 2 on the diagonal and 1 everywhere below:
// {(2,0,...), (1,2,0,...), ..., (1,...,1,2)}.
ExponentSet triangular_family(std::int64_t m);

// The variant with first row (2,1,0,...,0) instead of (2,0,...,0); kept
// alongside the triangular family because the two disagree and the
// standard_coefficient_report compares both.
ExponentSet triangular_family_alt(std::int64_t m);

// {(1,2), (k,1)} in N_0^2, k >= 2. Its polynomial is 2s + k while the
// minimal polynomial of the extension it presents is 2s + 1, so the
// Macaulay constants of a non-minimal presentation are unbounded.
// Throws std::invalid_argument for k < 2.
ExponentSet unbounded_constants_family(std::int64_t k);

struct ReportRow {
  std::int64_t m = 0;
  NumPoly omega;                 // oracle polynomial of triangular_family(m)
  std::vector<Int> standard;     // (a_{m-1}, ..., a_0), zero padded
  MinimizingCoeffs minimizing;
  MacaulayConstants constants;
  NumPoly omega_alt;             // same for triangular_family_alt(m)
  // a_0(w_m) == a_0(w_{m-1}) - a_1(w_{m-1}); vacuously true at m = 1.
  bool identity_ok = true;
  // Claimed closed forms this family is sometimes assigned: standard
  // coefficients chained from (1,1), minimizing coefficients (1,...,1),
  // constants (1,2,...,m). Absent at m = 1; compared, never asserted.
  std::optional<std::vector<Int>> claimed_standard;
  std::optional<std::vector<Int>> claimed_minimizing;
  bool standard_matches_claim = false;
  bool minimizing_matches_claim = false;
};

struct CoefficientReport {
  std::vector<ReportRow> rows;
};

// Computes the triangular family's polynomials for m = 1..m_max from the
// counting oracle, checks the coefficient recursion identity, and records
// the divergence from the claimed closed forms. m_max is capped at 8 by
// enumeration cost (std::invalid_argument beyond).
CoefficientReport standard_coefficient_report(std::int64_t m_max,
                                              std::int64_t budget = kDefaultBudget);

}  // namespace kolchin
