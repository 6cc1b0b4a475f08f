#include <kolchin/macaulay.hpp>

#include <cassert>
#include <stdexcept>

namespace kolchin {

MinimizingCoeffs minimizing_coefficients(const NumPoly& p) {
  std::vector<Int> b;
  NumPoly w = p;
  while (w.degree() > 0) {
    const std::int64_t d = w.degree();
    const Int lead = w.leading();
    b.push_back(lead);
    const NumPoly top = NumPoly::basis(d + 1);
    NumPoly v = w.shifted(lead) - top.shifted(lead) + top;
    assert(v.degree() < d);  // the leading terms cancel
    // (b_d, 0, ..., 0, b(v)): zeros fill the gap down to deg v.
    for (std::int64_t i = v.degree(); i < d - 1; ++i) b.emplace_back(0);
    w = std::move(v);
  }
  b.push_back(w.coeff(0));
  return MinimizingCoeffs{std::move(b)};
}

MacaulayConstants macaulay_constants(const MinimizingCoeffs& b) {
  std::vector<Int> c;
  c.reserve(b.b.size());
  Int acc(0);
  for (const Int& bi : b.b) {
    acc += bi;
    c.push_back(acc);
  }
  return MacaulayConstants{std::move(c)};
}

MacaulayConstants macaulay_constants(const NumPoly& p) {
  return macaulay_constants(minimizing_coefficients(p));
}

NumPoly reconstruct(const MacaulayConstants& c) {
  if (c.c.empty())
    throw std::invalid_argument("reconstruct: constants must be non-empty");
  const auto d = static_cast<std::int64_t>(c.c.size()) - 1;
  NumPoly w = NumPoly::basis(d + 1) - NumPoly(Int(1));
  for (std::int64_t i = 1; i <= d + 1; ++i) {
    const Int& ci = c.c[static_cast<std::size_t>(d + 1 - i)];
    w = w - NumPoly::basis(i).shifted(Int(-1) - ci);
  }
  return w;
}

bool is_kolchin(const NumPoly& p) {
  for (const Int& bi : minimizing_coefficients(p).b)
    if (bi < 0) return false;
  return true;
}

bool macaulay_nondecreasing(const NumPoly& p) {
  const MacaulayConstants mc = macaulay_constants(p);
  if (mc.c.front() < 0) return false;
  for (std::size_t i = 0; i + 1 < mc.c.size(); ++i)
    if (mc.c[i] > mc.c[i + 1]) return false;
  return true;
}

std::strong_ordering sit_compare(const NumPoly& p, const NumPoly& q) {
  const std::vector<Int> bp = minimizing_coefficients(p).b;
  const std::vector<Int> bq = minimizing_coefficients(q).b;
  const std::size_t n = std::max(bp.size(), bq.size());
  static const Int zero(0);
  for (std::size_t i = 0; i < n; ++i) {
    const Int& x = i < n - bp.size() ? zero : bp[i - (n - bp.size())];
    const Int& y = i < n - bq.size() ? zero : bq[i - (n - bq.size())];
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace kolchin
