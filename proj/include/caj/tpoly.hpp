#pragma once

#include "caj/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace caj {

// Variable T_k^a: sector a (1-based), level k >= 0. deg T_k = 2k+1.
struct VarIndex {
  int sector;
  int level;
  auto operator<=>(const VarIndex&) const = default;
};

struct VarPow {
  VarIndex var;
  int exp;
  auto operator<=>(const VarPow&) const = default;
};

// Sorted by variable, exponents >= 1; the empty monomial is the constant 1.
using Monomial = std::vector<VarPow>;

long monomial_degree(const Monomial& m);
std::string monomial_to_string(const Monomial& m);  // "T[a][k]^e * ..." or "1"

// Sparse multivariate polynomial in the T_k^a with exact rational coefficients.
class TPolynomial {
 public:
  TPolynomial() = default;
  static TPolynomial constant(const Rat& c);
  static TPolynomial variable(int sector, int level);
  static TPolynomial monomial_term(const Monomial& m, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  void add_term(const Monomial& m, const Rat& c);
  Rat coeff(const Monomial& m) const;
  Rat constant_term() const { return coeff({}); }

  // Max over monomials of sum (2*level+1)*exp; nullopt for the zero polynomial.
  std::optional<long> degree() const;
  std::map<long, TPolynomial> graded_parts() const;
  TPolynomial homogeneous_part(long d) const;
  int max_level() const;  // -1 if constant/zero

  TPolynomial derivative(int sector, int level) const;
  TPolynomial mul_var(int sector, int level, int exp = 1) const;

  TPolynomial& operator+=(const TPolynomial&);
  TPolynomial& operator-=(const TPolynomial&);
  TPolynomial scaled(const Rat&) const;
  bool operator==(const TPolynomial&) const = default;

  std::string to_string() const;

 private:
  std::map<Monomial, Rat> terms_;
};

TPolynomial operator+(const TPolynomial&, const TPolynomial&);
TPolynomial operator-(const TPolynomial&, const TPolynomial&);
TPolynomial operator*(const TPolynomial&, const TPolynomial&);

// Truncated series in hbar with polynomial coefficients: c[m] goes with hbar^m.
struct HbarSeries {
  std::vector<TPolynomial> c;

  HbarSeries() = default;
  explicit HbarSeries(int order) : c(static_cast<size_t>(order) + 1) {}
  static HbarSeries one(int order);

  int order() const { return static_cast<int>(c.size()) - 1; }
  const TPolynomial& at(int m) const { return c[static_cast<size_t>(m)]; }
  TPolynomial& at(int m) { return c[static_cast<size_t>(m)]; }

  HbarSeries truncated(int order) const;
  HbarSeries scaled(const Rat&) const;
  bool operator==(const HbarSeries&) const = default;
};

HbarSeries operator+(const HbarSeries&, const HbarSeries&);
HbarSeries operator-(const HbarSeries&, const HbarSeries&);
// Product truncated at the smaller order.
HbarSeries operator*(const HbarSeries&, const HbarSeries&);

// Replace every T_k^a by sum_b psi[a][b] T_k^b, exactly. Rejects singular psi.
HbarSeries substitute_basis(const HbarSeries& s, const RatMatrix& psi);
TPolynomial substitute_basis(const TPolynomial& p, const RatMatrix& psi);

}  // namespace caj
