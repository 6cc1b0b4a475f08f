#include <kolchin/lattice.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kolchin {

std::int64_t order_of(const Point& p) {
  std::int64_t total = 0;
  for (std::int64_t v : p) total += v;
  return total;
}

bool leq(const Point& e, const Point& x) {
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] > x[k]) return false;
  return true;
}

ExponentSet::ExponentSet(std::int64_t m_, std::vector<Point> rows_)
    : m(m_), rows(std::move(rows_)) {
  if (m < 0) throw std::invalid_argument("dimension must be non-negative");
  for (const Point& r : rows) {
    if (static_cast<std::int64_t>(r.size()) != m)
      throw std::invalid_argument("row width does not match dimension");
    for (std::int64_t v : r)
      if (v < 0) throw std::invalid_argument("exponents must be non-negative");
  }
}

ExponentSet minimal_elements(const ExponentSet& E) {
  std::vector<Point> rows = E.rows;
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::vector<Point> keep;
  for (const Point& r : rows) {
    bool dominated = false;
    for (const Point& q : rows) {
      if (q != r && leq(q, r)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(r);
  }
  ExponentSet out;
  out.m = E.m;
  out.rows = std::move(keep);
  return out;
}

ExponentSet colon(const ExponentSet& E, const Point& e) {
  if (static_cast<std::int64_t>(e.size()) != E.m)
    throw std::invalid_argument("pivot width does not match dimension");
  ExponentSet out;
  out.m = E.m;
  out.rows.reserve(E.rows.size());
  for (const Point& f : E.rows) {
    Point g(f.size());
    for (std::size_t k = 0; k < f.size(); ++k)
      g[k] = std::max<std::int64_t>(f[k] - e[k], 0);
    out.rows.push_back(std::move(g));
  }
  return out;
}

namespace {

// Enumerates every x with ord x <= s against an already normalized
// antichain. The budget keeps the count within int64 range as well.
std::int64_t count_on_antichain(const ExponentSet& A, std::int64_t s,
                                std::int64_t budget) {
  if (s < 0) return 0;
  const Int points = binomial(Int(s) + A.m, A.m);
  if (points > budget) {
    std::ostringstream os;
    os << "oracle budget exceeded: C(s+m, m) = " << points << " at s = " << s
       << ", m = " << A.m << " is over the budget of " << budget;
    throw ResourceError(os.str());
  }
  if (A.m == 0) return A.rows.empty() ? 1 : 0;
  std::int64_t count = 0;
  Point x(static_cast<std::size_t>(A.m), 0);
  std::int64_t used = 0;
  // Walk all x with ord x <= s in lexicographic order.
  for (;;) {
    bool free = true;
    for (const Point& e : A.rows) {
      if (leq(e, x)) {
        free = false;
        break;
      }
    }
    if (free) ++count;
    if (used < s) {
      ++x.back();
      ++used;
      continue;
    }
    std::size_t p = x.size();
    while (p > 0 && x[p - 1] == 0) --p;
    if (p <= 1) break;  // x = (s, 0, ..., 0) is the last point
    for (std::size_t k = p - 1; k < x.size(); ++k) {
      used -= x[k];
      x[k] = 0;
    }
    ++x[p - 2];
    ++used;
  }
  return count;
}

}  // namespace

Int count_free_points(const ExponentSet& E, std::int64_t s, std::int64_t budget) {
  return Int(count_on_antichain(minimal_elements(E), s, budget));
}

std::int64_t stabilization_bound(const ExponentSet& E) {
  if (E.rows.empty()) return 0;
  std::int64_t total = 0;
  for (std::int64_t k = 0; k < E.m; ++k) {
    std::int64_t mx = 0;
    for (const Point& r : E.rows)
      mx = std::max(mx, r[static_cast<std::size_t>(k)]);
    total += mx;
  }
  return total;
}

NumPoly dimension_polynomial(const ExponentSet& E, std::int64_t budget) {
  const ExponentSet A = minimal_elements(E);
  const std::int64_t B = stabilization_bound(A);
  std::vector<Int> samples;
  samples.reserve(static_cast<std::size_t>(A.m) + 1);
  for (std::int64_t s = B; s <= B + A.m; ++s)
    samples.emplace_back(count_on_antichain(A, s, budget));
  const NumPoly w = interpolate(Int(B), samples);
  for (std::int64_t s = B + A.m + 1; s <= B + A.m + 3; ++s) {
    if (w(Int(s)) != count_on_antichain(A, s, budget)) {
      std::ostringstream os;
      os << "verification mismatch: interpolated polynomial disagrees with "
            "the count at s = "
         << s;
      throw CrossCheckError(os.str());
    }
  }
  if (w.degree() > A.m || (!A.rows.empty() && !w.is_zero() && w.degree() > A.m - 1))
    throw CrossCheckError("verification mismatch: interpolated degree out of range");
  return w;
}

NumPoly dimension_polynomial_rec(const ExponentSet& E) {
  const ExponentSet A = minimal_elements(E);
  if (A.rows.empty()) return NumPoly::basis(A.m);
  if (order_of(A.rows.front()) == 0) return NumPoly();  // origin excludes all
  // Pivot: lexicographically smallest row of maximal order, then its first
  // positive coordinate.
  std::size_t pivot_row = 0;
  std::int64_t best = -1;
  for (std::size_t j = 0; j < A.rows.size(); ++j) {
    const std::int64_t o = order_of(A.rows[j]);
    if (o > best || (o == best && A.rows[j] < A.rows[pivot_row])) {
      best = o;
      pivot_row = j;
    }
  }
  std::size_t i = 0;
  while (A.rows[pivot_row][i] == 0) ++i;

  // Rows clear of coordinate i, with that coordinate dropped: the
  // polynomial of E u {unit_i} lives in m-1 coordinates.
  ExponentSet dropped;
  dropped.m = A.m - 1;
  for (const Point& r : A.rows) {
    if (r[i] != 0) continue;
    Point g;
    g.reserve(r.size() - 1);
    for (std::size_t k = 0; k < r.size(); ++k)
      if (k != i) g.push_back(r[k]);
    dropped.rows.push_back(std::move(g));
  }

  Point unit(static_cast<std::size_t>(A.m), 0);
  unit[i] = 1;
  return dimension_polynomial_rec(dropped) +
         dimension_polynomial_rec(colon(A, unit)).shifted(Int(-1));
}

NumPoly dimension_polynomial_ie(const ExponentSet& E) {
  const ExponentSet A = minimal_elements(E);
  const std::size_t n = A.rows.size();
  if (n > 20) {
    std::ostringstream os;
    os << "subset blowup: " << n << " rows after normalization (limit 20)";
    throw ResourceError(os.str());
  }
  // Group the 2^n terms by ord of the componentwise maximum.
  std::map<std::int64_t, Int> weight;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Point w(static_cast<std::size_t>(A.m), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      for (std::size_t k = 0; k < w.size(); ++k)
        w[k] = std::max(w[k], A.rows[j][k]);
    }
    weight[order_of(w)] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  NumPoly result;
  const NumPoly full = NumPoly::basis(A.m);
  for (const auto& [t, coeff] : weight) {
    if (coeff == 0) continue;
    result = result + full.shifted(Int(-t)).scaled(coeff);
  }
  return result;
}

NumPoly dimension_polynomial(Method method, const ExponentSet& E,
                             std::int64_t budget) {
  switch (method) {
    case Method::interpolation: return dimension_polynomial(E, budget);
    case Method::recursion: return dimension_polynomial_rec(E);
    case Method::inclusion_exclusion: return dimension_polynomial_ie(E);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace kolchin
