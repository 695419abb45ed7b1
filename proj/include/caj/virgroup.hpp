#pragma once

#include "caj/givental.hpp"
#include "caj/laurent.hpp"

#include <map>

namespace caj {

// Translation <-> Virasoro-group dictionary for one sector: chi coefficients
// of exp(sum chi_k l_k) with l_m = -z^{2m+1} d/dz, the associated series
// f(z) = exp(X) z and its compositional inverse h.
struct VirGroupElement {
  int sector = 1;
  std::map<int, Rat> chi;  // support k >= 1
  LaurentSeries f;
  LaurentSeries h;
};

// v^a(z) = sqrt_delta_a sum_{k>=1+alpha} (DT_k^a/(2k+1)!!) z^{2k+1}.
LaurentSeries v_from_translation(const GiventalData& d, int sector, int trunc_order);

// f = z (1 - (2a+1) v/z^{2a+1})^{1/(2a+1)}; for alpha = 0 this is z - v.
LaurentSeries f_from_v(int alpha, const LaurentSeries& v);

// Flow of the vector field sum_k -chi_k z^{2k+1} d/dz applied to z.
LaurentSeries f_from_chi(const std::map<int, Rat>& chi, int trunc_order);

// Unique chi with f_from_chi(chi) = f to truncation, solved lowest-k first.
std::map<int, Rat> chi_from_f(const LaurentSeries& f, int chi_max);

VirGroupElement make_virgroup_element(const GiventalData& d, int sector, int trunc_order,
                                      int chi_max);

// exp(sign * sum_a sum_k chi^a_k L^a_k) applied to s; terminates because each
// L_k with k >= 1 lowers polynomial degree by 2k. Rejects chi with k <= 0.
HbarSeries apply_V(const std::vector<VirGroupElement>& elements, const HbarSeries& s,
                   int sign = 1);

struct VirtosReport {
  bool ok = false;
  std::string detail;
};

// Lemma check: translation path exp(hbar^-1 sum sqrt_delta DT_k d/dT_k) tau_alpha
// against the Virasoro-group path V tau_alpha, compared through hbar^K.
VirtosReport check_virtos(const GiventalData& d, int sector, int K);

}  // namespace caj
