#include "caj/rational.hpp"

#include <cctype>

namespace caj {

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  size_t slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: bad literal '" + text + "'");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("rational: bad literal '" + text + "'");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("rational: bad literal '" + text + "'");
  };
  if (slash == std::string::npos) {
    check_int(text);
    return Rat(Int(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  return Rat(Int(num), d);
}

std::string rat_to_string(const Rat& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

const Int& double_fact(long odd_n) {
  if (odd_n < -1 || odd_n % 2 == 0)
    throw std::invalid_argument("double_fact: argument must be odd and >= -1");
  static std::vector<Int> cache{1};  // cache[k] = (2k-1)!!
  long k = (odd_n + 1) / 2;
  while (static_cast<long>(cache.size()) <= k)
    cache.push_back(cache.back() * Int(2 * cache.size() - 1));
  return cache[k];
}

Rat rat_binomial(const Rat& x, long n) {
  Rat result = 1;
  for (long i = 0; i < n; ++i) result *= (x - i) / Rat(i + 1);
  return result;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix m(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) m.at(c, r) = at(r, c);
  return m;
}

RatMatrix RatMatrix::inverse() const {
  RatMatrix a = *this;
  RatMatrix inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int r = col; r < n_; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("RatMatrix::inverse: singular matrix");
    for (int c = 0; c < n_; ++c) {
      std::swap(a.at(col, c), a.at(pivot, c));
      std::swap(inv.at(col, c), inv.at(pivot, c));
    }
    Rat p = a.at(col, col);
    for (int c = 0; c < n_; ++c) {
      a.at(col, c) /= p;
      inv.at(col, c) /= p;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      Rat f = a.at(r, col);
      for (int c = 0; c < n_; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  int n = x.size();
  RatMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      if (x.at(r, k) == 0) continue;
      for (int c = 0; c < n; ++c) m.at(r, c) += x.at(r, k) * y.at(k, c);
    }
  return m;
}

}  // namespace caj
