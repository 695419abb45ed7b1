#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace caj {

using Int = boost::multiprecision::cpp_int;
// Exact rational scalar. cpp_rational keeps lowest terms and a positive
// denominator by construction, so every value is canonical.
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

// Parses "p", "-p", "p/q" (q > 0 after normalization). Throws on junk or q == 0.
Rat rat_from_string(const std::string& text);

// Canonical "p/q" form, denominator always printed ("5" renders as "5/1").
std::string rat_to_string(const Rat& value);

// Odd double factorial n!! for odd n >= -1, with (-1)!! = 1. Memoized.
const Int& double_fact(long odd_n);

// binomial(x, n) = x(x-1)...(x-n+1)/n! for rational x.
Rat rat_binomial(const Rat& x, long n);

// Small dense matrix of exact rationals; just enough for r-matrix jets and
// basis changes (N is the number of sectors, typically 1 or 2).
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  static RatMatrix identity(int n);

  int size() const { return n_; }
  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

  RatMatrix transposed() const;
  // Gauss-Jordan; throws std::domain_error if singular.
  RatMatrix inverse() const;
  bool operator==(const RatMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<Rat> a_;
};

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);

}  // namespace caj
