#pragma once

#include "caj/cutjoin.hpp"
#include "caj/givental.hpp"

#include <map>
#include <utility>

namespace caj {

// N families of Virasoro operators L^a_m, built by symbolic conjugation of the
// constrained seed operators: Delta rescaling, explicit translation
// conjugation, then exp-conjugation by the quantized r(z).
struct VirasoroFamily {
  GiventalData data;
  Window window;
  int m_max = 0;
  std::map<std::pair<int, int>, ModeOperator> ops;  // (sector, m), m >= -alpha_a

  const ModeOperator& at(int sector, int m) const { return ops.at({sector, m}); }
};

// The window must cover the order of any series the family is applied to;
// a constraint check through hbar^K reads Z at order K+1, so it needs the
// window for K+1.
VirasoroFamily build_L_family(const GiventalData& d, int m_max, const Window& w);

struct ConstraintReport {
  bool ok = false;
  std::string detail;
};

// Asserts L^a_m Z = 0 through hbar^K for every family member; Z must be
// computed to order K+1 (the hbar^-1 terms consume one order).
ConstraintReport check_constraints(const VirasoroFamily& fam, const HbarSeries& z, int K);

struct KFamily {
  std::map<std::pair<int, int>, ModeOperator> khat;  // (sector, m) m >= -alpha
  KtildeMap ktilde;                                  // (sector, level k >= 0), hbar-free
};

// Triangular elimination against the hbar^-1 tail: each K^a_k keeps exactly
// one hbar^-1 term; K~_{k;a} = (2 sqrt_delta/(2k+1)!!) K^a_{k-alpha} + hbar^-1 d/dT_k.
KFamily build_K_family(const VirasoroFamily& fam, const Window& w);

// H = R V (sum_a L^a_0/(2 alpha_a+1)) V^-1 R^-1; hbar d/dhbar Z = H Z.
ModeOperator build_H(const GiventalData& d, const Window& w);

// Default family depth for solving at order K.
int default_family_m_max(const GiventalData& d, int K);

// Solver C: positive-degree parts of Z^{(m)} from the Euler-operator equation
// driven by the K~ family, degree-0 parts from the H relation.
HbarSeries solve_from_constraints(const GiventalData& d, int K, int window_margin = 0);

}  // namespace caj
