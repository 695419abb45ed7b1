#pragma once

#include "caj/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace caj {

// Truncated one-variable Laurent series over Rat. A series knows the highest
// exponent it certifies (truncation_order); coefficients above it are
// undefined, never silently zero. Coefficients below the stored window are
// exact zeros. Values are immutable in practice: every operation returns a
// new series carrying the tightest truncation it can prove.
class LaurentSeries {
 public:
  LaurentSeries() : trunc_(0), low_(0) {}  // zero series certified through z^0

  static LaurentSeries zero(int trunc_order);
  static LaurentSeries monomial(int exponent, const Rat& coeff, int trunc_order);
  // coeffs[i] is the coefficient of z^(lowest+i); highest index must be <= trunc_order.
  static LaurentSeries from_coeffs(int lowest, std::vector<Rat> coeffs, int trunc_order);

  int truncation_order() const { return trunc_; }
  bool is_zero() const { return c_.empty(); }
  // Exponent of the first nonzero coefficient; nullopt for the zero series.
  std::optional<int> valuation() const;
  int lowest_exponent() const { return c_.empty() ? trunc_ + 1 : low_; }

  // Throws std::out_of_range above the truncation order.
  const Rat& coeff(int exponent) const;

  LaurentSeries truncated(int order) const;
  LaurentSeries shifted(int exponent_offset) const;  // multiply by z^k
  LaurentSeries derivative() const;
  LaurentSeries plus_part() const;  // drop exponents < 0
  LaurentSeries scaled(const Rat& s) const;
  // 1/s for s with nonzero leading coefficient; certified to trunc - 2*valuation.
  LaurentSeries inverse() const;
  LaurentSeries pow(int e) const;  // any integer exponent

  // True if every nonzero exponent has the given parity (0 even, 1 odd).
  bool has_parity(int parity) const;

  // Nonzero coefficients in exponent order, for the debug dump.
  std::vector<std::pair<int, std::string>> dump_pairs() const;
  std::string to_string() const;

  // Coefficients agree wherever both are certified, at least through `through`.
  bool agrees_with(const LaurentSeries& other, int through) const;

  friend LaurentSeries operator+(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries operator-(const LaurentSeries&, const LaurentSeries&);
  friend LaurentSeries operator*(const LaurentSeries&, const LaurentSeries&);

 private:
  void normalize();
  int trunc_;
  int low_;
  std::vector<Rat> c_;
};

// outer(inner) to the provable common order. inner must have valuation >= 1.
LaurentSeries series_compose(const LaurentSeries& outer, const LaurentSeries& inner);

// Compositional inverse of f in z + z^3*C[[z^2]]: returns h with f(h(z)) = z.
LaurentSeries series_reverse(const LaurentSeries& f);

// (1+u)^(1/root) for odd positive root and valuation(u) >= 1; constant term 1.
LaurentSeries binomial_power(const LaurentSeries& u, int root);

// Coefficient of z^-1. Requires truncation_order >= -1.
Rat residue(const LaurentSeries& s);

}  // namespace caj
