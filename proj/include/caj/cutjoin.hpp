#pragma once

#include "caj/givental.hpp"

#include <array>
#include <map>
#include <utility>

namespace caj {

// Cut-and-join operator in cubic normal form: hbar-free coefficients on
// sorted mode triples (i <= j <= k) plus a linear part.
struct CutJoinOperator {
  std::map<std::array<ModeIndex, 3>, Rat> cubic;
  std::map<ModeIndex, Rat> linear;
  Window window;

  ModeOperator to_mode_operator() const;
  // Splits a normal-ordered hbar-free operator into cubic + linear parts;
  // throws if any term has another arity or carries hbar.
  static CutJoinOperator pack(const ModeOperator& op, const Window& w);

  // Deterministic text table: "A a b c i j k p/q" and "B a j p/q" lines.
  std::string export_table() const;
};

struct ResidueCoeffs {
  std::map<std::pair<int, int>, Rat> A;  // (i, j) -> coefficient of J_i L_j
  std::map<int, Rat> B;                  // j -> coefficient of J_j
};

// Exact residue coefficients of the conjugated current representation for one
// sector, over the window's retained index ranges.
ResidueCoeffs coefficients_AV_BV(const GiventalData& d, int sector, const Window& w);

// sum_a (sum A^{i,j} J_i L_j + sum B^j J_j) in cubic normal form.
ModeOperator assemble_W_V(const GiventalData& d, const Window& w);

// exp(r) W_V exp(-r) packed as a CutJoinOperator; returns w_v repacked for r = 0.
CutJoinOperator conjugate_W(const GiventalData& d, const ModeOperator& w_v, const Window& w);

// Convenience: assemble_W_V + conjugate_W with the window sized for d.order_K
// (enlarged by window_margin, for stability checks).
CutJoinOperator build_cut_and_join(const GiventalData& d, int window_margin = 0);

// Z^{(0)} = 1, Z^{(m)} = (1/m) W Z^{(m-1)}.
HbarSeries run_recursion(const ModeOperator& w, int K);
HbarSeries run_recursion(const CutJoinOperator& w, int K);

// tau_alpha = exp(hbar W_alpha) 1 truncated at hbar^K.
HbarSeries tau_alpha(int alpha, int K);
HbarSeries tau_alpha_sector(int sector, int alpha, int K);

// Ambiguity shift key {a, k, b, m}: adds C * (d/dT_m^a K~_k^b - d/dT_k^b K~_m^a).
using AmbiguityKey = std::array<int, 4>;
using KtildeMap = std::map<std::pair<int, int>, ModeOperator>;  // (sector, level) -> K~

ModeOperator ambiguity_operator(const AmbiguityKey& key, const KtildeMap& ktilde,
                                const Window& w);
CutJoinOperator ambiguity_shift(const CutJoinOperator& w, const std::map<AmbiguityKey, Rat>& C,
                                const KtildeMap& ktilde);

}  // namespace caj
