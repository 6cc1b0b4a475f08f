#include <kolchin/numpoly.hpp>

#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kolchin {

Int binomial(const Int& n, std::int64_t k) {
  if (k < 0) return Int(0);
  Int r(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    // A partial product of i consecutive integers is divisible by i!,
    // so dividing step by step stays exact.
    r /= i;
  }
  return r;
}

NumPoly::NumPoly(std::vector<Int> ascending) : a_(std::move(ascending)) {
  normalize();
}

NumPoly::NumPoly(std::initializer_list<Int> ascending) : a_(ascending) {
  normalize();
}

void NumPoly::normalize() {
  while (a_.size() > 1 && a_.back() == 0) a_.pop_back();
  if (a_.empty()) a_.push_back(Int(0));
}

NumPoly NumPoly::from_standard(const std::vector<Int>& descending) {
  return NumPoly(std::vector<Int>(descending.rbegin(), descending.rend()));
}

NumPoly NumPoly::basis(std::int64_t i) {
  if (i < 0) throw std::invalid_argument("basis index must be non-negative");
  std::vector<Int> a(static_cast<std::size_t>(i) + 1, Int(0));
  a.back() = 1;
  return NumPoly(std::move(a));
}

std::vector<Int> NumPoly::standard() const {
  return std::vector<Int>(a_.rbegin(), a_.rend());
}

Int NumPoly::coeff(std::int64_t i) const {
  if (i < 0 || i >= static_cast<std::int64_t>(a_.size())) return Int(0);
  return a_[static_cast<std::size_t>(i)];
}

Int NumPoly::operator()(const Int& s) const {
  Int total(0);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] != 0) total += a_[i] * binomial(s + Int(i), static_cast<std::int64_t>(i));
  }
  return total;
}

NumPoly NumPoly::shifted(const Int& amount) const {
  if (amount == 0 || is_zero()) return *this;
  const auto d = static_cast<std::int64_t>(a_.size()) - 1;
  std::vector<Int> out(a_.size(), Int(0));
  for (std::int64_t j = 0; j <= d; ++j) {
    Int acc(0);
    for (std::int64_t i = j; i <= d; ++i) {
      const Int& ai = a_[static_cast<std::size_t>(i)];
      if (ai != 0) acc += ai * binomial(amount + (i - j) - 1, i - j);
    }
    out[static_cast<std::size_t>(j)] = std::move(acc);
  }
  return NumPoly(std::move(out));
}

NumPoly NumPoly::difference() const {
  if (a_.size() == 1) return NumPoly();
  return NumPoly(std::vector<Int>(a_.begin() + 1, a_.end()));
}

NumPoly NumPoly::scaled(const Int& factor) const {
  std::vector<Int> out = a_;
  for (Int& c : out) c *= factor;
  return NumPoly(std::move(out));
}

NumPoly NumPoly::operator-() const { return scaled(Int(-1)); }

NumPoly operator+(const NumPoly& p, const NumPoly& q) {
  std::vector<Int> out(std::max(p.a_.size(), q.a_.size()), Int(0));
  for (std::size_t i = 0; i < p.a_.size(); ++i) out[i] += p.a_[i];
  for (std::size_t i = 0; i < q.a_.size(); ++i) out[i] += q.a_[i];
  return NumPoly(std::move(out));
}

NumPoly operator-(const NumPoly& p, const NumPoly& q) { return p + (-q); }

std::string NumPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::int64_t i = degree(); i >= 0; --i) {
    const Int& c = a_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "C(s+" << i << "," << i << ")";
    }
  }
  return os.str();
}

NumPoly interpolate(const Int& base, const std::vector<Int>& values) {
  if (values.empty())
    throw std::invalid_argument("interpolate: need at least one sample");
  std::vector<Int> diff = values;
  NumPoly result;
  const std::size_t n = diff.size();
  for (std::size_t level = 0; level < n; ++level) {
    if (diff[0] != 0) {
      // Newton term diff * C(s - base, level), written through the basis
      // element C(s+level, level) shifted by -(base + level).
      const auto lvl = static_cast<std::int64_t>(level);
      result = result + NumPoly::basis(lvl).shifted(-base - lvl).scaled(diff[0]);
    }
    for (std::size_t j = 0; j + level + 1 < n; ++j) diff[j] = diff[j + 1] - diff[j];
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const NumPoly& p) {
  return os << p.str();
}

}  // namespace kolchin
