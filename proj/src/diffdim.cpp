#include <kolchin/diffdim.hpp>

#include <stdexcept>
#include <utility>

namespace kolchin {

DifferentialSystem::DifferentialSystem(std::int64_t m_, std::vector<ExponentSet> sets_)
    : m(m_), sets(std::move(sets_)) {
  if (sets.empty())
    throw std::invalid_argument("a system needs at least one indeterminate");
  for (const ExponentSet& E : sets)
    if (E.m != m)
      throw std::invalid_argument("all member sets must share the dimension");
}

NumPoly system_dimension_polynomial(const DifferentialSystem& sys,
                                    std::int64_t budget) {
  NumPoly total;
  for (const ExponentSet& E : sys.sets)
    total = total + dimension_polynomial(E, budget);
  return total;
}

NumPoly single_equation_poly(std::int64_t m, std::int64_t d) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (d < 0) throw std::invalid_argument("order must be non-negative");
  const NumPoly full = NumPoly::basis(m);
  return full - full.shifted(Int(-d));
}

MinimalCandidate classify_minimal_candidate(const NumPoly& p, std::int64_t m) {
  const MacaulayConstants mc = macaulay_constants(p);
  MinimalCandidate out;
  out.constant_macaulay = mc.c.front() >= 0;
  for (const Int& ci : mc.c)
    if (ci != mc.c.front()) {
      out.constant_macaulay = false;
      break;
    }
  out.degree_matches = p.degree() == m - 1;
  if (out.constant_macaulay && out.degree_matches) out.order = mc.c.front();
  return out;
}

ExponentSet triangular_family(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  std::vector<Point> rows;
  for (std::int64_t i = 0; i < m; ++i) {
    Point r(static_cast<std::size_t>(m), 0);
    for (std::int64_t k = 0; k < i; ++k) r[static_cast<std::size_t>(k)] = 1;
    r[static_cast<std::size_t>(i)] = 2;
    rows.push_back(std::move(r));
  }
  return ExponentSet(m, std::move(rows));
}

ExponentSet triangular_family_alt(std::int64_t m) {
  ExponentSet E = triangular_family(m);
  if (m >= 2) E.rows[0][1] = 1;  // (2,1,0,...,0) instead of (2,0,...,0)
  return E;
}

ExponentSet unbounded_constants_family(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  return ExponentSet(2, {{1, 2}, {k, 1}});
}

namespace {

// The claimed standard-coefficient chain: seeded with (1,1) at m = 2 and
// extended by appending a_0(m) = a_0(m-1) - a_1(m-1). Yields (1,1,0),
// (1,1,0,-1), (1,1,0,-1,-1), ...
std::vector<Int> claimed_standard_chain(std::int64_t m) {
  std::vector<Int> a{Int(1), Int(1)};
  for (std::int64_t i = 3; i <= m; ++i) {
    const Int next = a[a.size() - 1] - a[a.size() - 2];
    a.push_back(next);
  }
  return a;
}

}  // namespace

CoefficientReport standard_coefficient_report(std::int64_t m_max,
                                              std::int64_t budget) {
  if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
  if (m_max > 8)
    throw std::invalid_argument("m_max is capped at 8 (enumeration cost)");
  CoefficientReport report;
  NumPoly prev;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    ReportRow row;
    row.m = m;
    row.omega = dimension_polynomial(triangular_family(m), budget);
    row.omega_alt = dimension_polynomial(triangular_family_alt(m), budget);
    for (std::int64_t i = m - 1; i >= 0; --i) row.standard.push_back(row.omega.coeff(i));
    row.minimizing = minimizing_coefficients(row.omega);
    row.constants = macaulay_constants(row.minimizing);
    if (m >= 2) {
      row.identity_ok = row.omega.coeff(0) == prev.coeff(0) - prev.coeff(1);
      row.claimed_standard = claimed_standard_chain(m);
      row.claimed_minimizing = std::vector<Int>(static_cast<std::size_t>(m), Int(1));
      row.standard_matches_claim = row.standard == *row.claimed_standard;
      row.minimizing_matches_claim = row.minimizing.b == *row.claimed_minimizing;
    }
    prev = row.omega;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace kolchin
