#pragma once

#include "caj/tpoly.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace caj {

// Abstract mode J^a_k: multiplication by T_{|k|}/(2|k|-1)!! for k <= 0,
// the scaled derivative (2k-1)!! d/dT_{k-1} for k >= 1.
// Same-sector modes satisfy [J_k, J_m] = (2k-1) delta_{k+m,1}; cross-sector
// modes commute. deg J_k = 1 - 2k.
struct ModeIndex {
  int sector;
  int mode;
  friend std::strong_ordering operator<=>(const ModeIndex& a, const ModeIndex& b) {
    if (auto c = a.mode <=> b.mode; c != 0) return c;
    return a.sector <=> b.sector;
  }
  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

// Normal-ordered term: all creation modes (mode <= 0) left of all
// annihilation modes (mode >= 1), each list sorted, with an integer power of
// hbar carried on the term itself.
struct ModeKey {
  int hbar = 0;
  std::vector<ModeIndex> cre;
  std::vector<ModeIndex> ann;
  auto operator<=>(const ModeKey&) const = default;
};

long term_degree(const ModeKey& k);

// Retention window for operator truncations. A run representing polynomials
// with variable levels <= level_max and degrees <= degree_cap keeps a term iff
//   term degree >= -degree_cap,
//   every annihilation mode <= level_max + 1,
//   every creation level <= creator_cap.
// creator_cap is level_max for operators that are applied directly; during
// exp-conjugation it must leave slack (a later ad step can lower a creation
// mode by k while the term degree drops by 2k), see with_creator_slack().
struct Window {
  int level_max = 0;
  int degree_cap = 0;
  int creator_cap = 0;

  static Window for_order(int order_K, bool any_alpha_one);
  Window expanded(int extra) const;
  Window with_creator_slack() const;
  int annihilator_mode_max() const { return level_max + 1; }
};

// Largest variable level that can occur through hbar^K.
int run_level_max(int order_K, bool any_alpha_one);

class ModeOperator {
 public:
  ModeOperator() = default;
  static ModeOperator constant(const Rat& c);
  static ModeOperator mode(int sector, int k);  // J^sector_k
  static ModeOperator term(const Rat& coeff, int hbar, std::vector<ModeIndex> modes);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<ModeKey, Rat>& terms() const { return terms_; }
  void add_term(ModeKey key, const Rat& coeff);

  ModeOperator& operator+=(const ModeOperator&);
  ModeOperator& operator-=(const ModeOperator&);
  ModeOperator scaled(const Rat&) const;
  ModeOperator hbar_shifted(int shift) const;
  bool operator==(const ModeOperator&) const = default;

  ModeOperator windowed(const Window&) const;

  // Smallest hbar power carried by any term (0 for the empty operator).
  int min_hbar_shift() const;
  int max_exact_order(int input_order) const;

  // Action on a polynomial; requires every term to carry hbar^0.
  TPolynomial apply_poly(const TPolynomial&) const;
  // Action on an hbar-series, exact through out_order. Throws if a term's
  // hbar shift would need input coefficients beyond s.order().
  HbarSeries apply(const HbarSeries& s, int out_order) const;

  std::string dump() const;  // one term per line, creations first

 private:
  std::map<ModeKey, Rat> terms_;
};

ModeOperator operator+(const ModeOperator&, const ModeOperator&);
ModeOperator operator-(const ModeOperator&, const ModeOperator&);

// Composition a∘b rewritten in normal-ordered form (exact, no window).
ModeOperator normal_order_product(const ModeOperator& a, const ModeOperator& b);
ModeOperator commutator(const ModeOperator& a, const ModeOperator& b);

// exp(g) x exp(-g) = sum_n ad_g^n(x)/n!, truncated by the window's retention
// predicate. g must be hbar-free with every term of strictly negative degree,
// which makes the sum terminate inside the window.
ModeOperator conjugate_by_exponential(const ModeOperator& x, const ModeOperator& g,
                                      const Window& w);

}  // namespace caj
