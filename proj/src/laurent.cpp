#include "caj/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace caj {

namespace {
constexpr int kOrderCap = 1 << 20;  // stands in for "exact at every order"
}

void LaurentSeries::normalize() {
  size_t b = 0;
  while (b < c_.size() && c_[b] == 0) ++b;
  size_t e = c_.size();
  while (e > b && c_[e - 1] == 0) --e;
  if (b > 0 || e < c_.size()) {
    c_ = std::vector<Rat>(c_.begin() + b, c_.begin() + e);
    low_ += static_cast<int>(b);
  }
  if (c_.empty()) low_ = 0;
  trunc_ = std::min(trunc_, kOrderCap);
}

LaurentSeries LaurentSeries::zero(int trunc_order) {
  LaurentSeries s;
  s.trunc_ = trunc_order;
  return s;
}

LaurentSeries LaurentSeries::monomial(int exponent, const Rat& coeff, int trunc_order) {
  if (exponent > trunc_order)
    throw std::invalid_argument("LaurentSeries::monomial: exponent beyond truncation");
  LaurentSeries s;
  s.trunc_ = trunc_order;
  s.low_ = exponent;
  s.c_ = {coeff};
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::from_coeffs(int lowest, std::vector<Rat> coeffs, int trunc_order) {
  if (lowest + static_cast<int>(coeffs.size()) - 1 > trunc_order)
    throw std::invalid_argument("LaurentSeries::from_coeffs: coefficients beyond truncation");
  LaurentSeries s;
  s.trunc_ = trunc_order;
  s.low_ = lowest;
  s.c_ = std::move(coeffs);
  s.normalize();
  return s;
}

std::optional<int> LaurentSeries::valuation() const {
  if (c_.empty()) return std::nullopt;
  return low_;
}

const Rat& LaurentSeries::coeff(int exponent) const {
  static const Rat zero = 0;
  if (exponent > trunc_)
    throw std::out_of_range("LaurentSeries::coeff: exponent beyond truncation order");
  int i = exponent - low_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

LaurentSeries LaurentSeries::truncated(int order) const {
  LaurentSeries s = *this;
  s.trunc_ = std::min(trunc_, order);
  if (!s.c_.empty() && s.low_ + static_cast<int>(s.c_.size()) - 1 > s.trunc_) {
    int keep = s.trunc_ - s.low_ + 1;
    s.c_.resize(keep > 0 ? keep : 0);
  }
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries s = *this;
  s.low_ += k;
  s.trunc_ += k;
  return s;
}

LaurentSeries LaurentSeries::derivative() const {
  LaurentSeries s;
  s.trunc_ = trunc_ - 1;
  s.low_ = low_ - 1;
  s.c_.resize(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) s.c_[i] = c_[i] * (low_ + static_cast<int>(i));
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::plus_part() const {
  LaurentSeries s = *this;
  if (!s.c_.empty() && s.low_ < 0) {
    int drop = -s.low_;
    if (drop >= static_cast<int>(s.c_.size())) {
      s.c_.clear();
    } else {
      s.c_.erase(s.c_.begin(), s.c_.begin() + drop);
    }
    s.low_ = 0;
  }
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::scaled(const Rat& f) const {
  if (f == 0) return zero(trunc_);
  LaurentSeries s = *this;
  for (auto& x : s.c_) x *= f;
  return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries s;
  s.trunc_ = std::min(a.trunc_, b.trunc_);
  if (a.c_.empty() && b.c_.empty()) return s;
  int low = std::min(a.c_.empty() ? b.low_ : a.low_, b.c_.empty() ? a.low_ : b.low_);
  int high = s.trunc_;
  if (low > high) return s;
  s.low_ = low;
  s.c_.assign(static_cast<size_t>(high - low + 1), Rat(0));
  auto acc = [&](const LaurentSeries& x) {
    for (size_t i = 0; i < x.c_.size(); ++i) {
      int e = x.low_ + static_cast<int>(i);
      if (e <= high) s.c_[static_cast<size_t>(e - low)] += x.c_[i];
    }
  };
  acc(a);
  acc(b);
  s.normalize();
  return s;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + b.scaled(-1);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // Unknown tails enter a product at exponent (trunc+1) + valuation(other).
  int va = a.c_.empty() ? a.trunc_ + 1 : a.low_;
  int vb = b.c_.empty() ? b.trunc_ + 1 : b.low_;
  long t = std::min<long>(static_cast<long>(a.trunc_) + 1 + vb,
                          static_cast<long>(b.trunc_) + 1 + va) -
           1;
  LaurentSeries s;
  s.trunc_ = static_cast<int>(std::min<long>(t, kOrderCap));
  if (a.c_.empty() || b.c_.empty()) return s;
  int low = va + vb;
  if (low > s.trunc_) return s;
  s.low_ = low;
  s.c_.assign(static_cast<size_t>(s.trunc_ - low + 1), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    int ea = a.low_ + static_cast<int>(i);
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      int e = ea + b.low_ + static_cast<int>(j);
      if (e > s.trunc_) break;
      s.c_[static_cast<size_t>(e - low)] += a.c_[i] * b.c_[j];
    }
  }
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::inverse() const {
  if (c_.empty() || c_[0] == 0)
    throw std::domain_error("LaurentSeries::inverse: no invertible leading coefficient");
  int v = low_;
  int rel = trunc_ - v;  // relative precision carries over to the inverse
  LaurentSeries u;       // unit part, exponents 0..rel
  u.trunc_ = rel;
  u.low_ = 0;
  u.c_.assign(c_.begin(), c_.end());
  if (static_cast<int>(u.c_.size()) > rel + 1) u.c_.resize(static_cast<size_t>(rel) + 1);
  std::vector<Rat> inv(static_cast<size_t>(rel) + 1, Rat(0));
  inv[0] = Rat(1) / u.c_[0];
  for (int n = 1; n <= rel; ++n) {
    Rat acc = 0;
    for (int k = 1; k <= n && k < static_cast<int>(u.c_.size()); ++k)
      acc += u.c_[static_cast<size_t>(k)] * inv[static_cast<size_t>(n - k)];
    inv[static_cast<size_t>(n)] = -acc / u.c_[0];
  }
  LaurentSeries s;
  s.trunc_ = rel - v;
  s.low_ = -v;
  s.c_ = std::move(inv);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::pow(int e) const {
  if (e == 0) return monomial(0, 1, kOrderCap);  // exact 1
  const LaurentSeries base = e > 0 ? *this : inverse();
  LaurentSeries acc = base;
  for (int i = 1; i < std::abs(e); ++i) acc = acc * base;
  return acc;
}

bool LaurentSeries::has_parity(int parity) const {
  for (size_t i = 0; i < c_.size(); ++i) {
    int e = low_ + static_cast<int>(i);
    if (c_[i] != 0 && ((e % 2 + 2) % 2) != parity) return false;
  }
  return true;
}

std::vector<std::pair<int, std::string>> LaurentSeries::dump_pairs() const {
  std::vector<std::pair<int, std::string>> out;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), rat_to_string(c_[i]));
  return out;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (auto& [e, v] : dump_pairs()) {
    if (!first) os << ", ";
    first = false;
    os << "(" << e << ", " << v << ")";
  }
  os << "] + O(z^" << (trunc_ + 1) << ")";
  return os.str();
}

bool LaurentSeries::agrees_with(const LaurentSeries& other, int through) const {
  if (trunc_ < through || other.trunc_ < through) return false;
  int lo = std::min(lowest_exponent(), other.lowest_exponent());
  for (int e = lo; e <= std::min({trunc_, other.trunc_}); ++e)
    if (coeff(e) != other.coeff(e)) return false;
  return true;
}

LaurentSeries series_compose(const LaurentSeries& outer, const LaurentSeries& inner) {
  auto v = inner.valuation();
  if (!v || *v < 1)
    throw std::invalid_argument("series_compose: inner series must have valuation >= 1");
  int vi = *v;
  int ti = inner.truncation_order();
  int to = outer.truncation_order();
  int lo = outer.lowest_exponent();
  // outer tail unknown above to; inner tail unknown above ti.
  long t = static_cast<long>(to + 1) * vi - 1;
  t = std::min(t, static_cast<long>(ti));  // e = 1 term error
  if (lo < 0) t = std::min(t, static_cast<long>(lo) * vi + ti - vi);
  if (outer.is_zero()) return LaurentSeries::zero(static_cast<int>(t));
  LaurentSeries acc = LaurentSeries::zero(static_cast<int>(t));
  if (t < static_cast<long>(lo) * vi)
    throw std::invalid_argument("series_compose: truncation orders leave no computable coefficient");
  LaurentSeries power = inner.pow(lo);
  for (int e = lo; e <= to; ++e) {
    if (static_cast<long>(e) * vi > t) break;
    const Rat& ce = outer.coeff(e);
    if (ce != 0) acc = acc + power.scaled(ce).truncated(static_cast<int>(t));
    if (e < to) power = power * inner;
  }
  return acc.truncated(static_cast<int>(t));
}

LaurentSeries series_reverse(const LaurentSeries& f) {
  auto v = f.valuation();
  if (!v || *v != 1 || f.coeff(1) != 1)
    throw std::invalid_argument("series_reverse: series must start with z");
  if (!f.has_parity(1))
    throw std::invalid_argument("series_reverse: series must have odd exponents only");
  int t = f.truncation_order();
  LaurentSeries h = LaurentSeries::monomial(1, 1, t);
  // Order-by-order: the z^n mismatch of f(h) is exactly the missing h_n.
  for (int n = 3; n <= t; n += 2) {
    Rat mismatch = series_compose(f, h).coeff(n);
    if (mismatch != 0) h = h + LaurentSeries::monomial(n, -mismatch, t);
  }
  return h;
}

LaurentSeries binomial_power(const LaurentSeries& u, int root) {
  if (root <= 0 || root % 2 == 0)
    throw std::invalid_argument("binomial_power: root must be a positive odd integer");
  if (!u.is_zero() && *u.valuation() < 1)
    throw std::invalid_argument("binomial_power: series must have valuation >= 1");
  int t = u.truncation_order();
  LaurentSeries acc = LaurentSeries::monomial(0, 1, t);
  if (u.is_zero()) return acc;
  Rat x(1, root);
  LaurentSeries power = u;
  int vu = *u.valuation();
  for (long n = 1; n * vu <= t; ++n) {
    acc = acc + power.scaled(rat_binomial(x, n)).truncated(t);
    power = (power * u).truncated(t);
  }
  return acc;
}

Rat residue(const LaurentSeries& s) {
  if (s.truncation_order() < -1)
    throw std::invalid_argument("residue: exponent -1 beyond the truncation order");
  return s.coeff(-1);
}

}  // namespace caj
