#pragma once

#include "caj/modeops.hpp"

#include <vector>

namespace caj {

// Virasoro operator L_m in one sector, all three blocks
//   1/2 sum_{i+j=-m-1} T_i T_j / ((2i-1)!!(2j-1)!!)
//   + sum_k ((2k+2m+1)!!/(2k-1)!!) T_k d/dT_{k+m}
//   + 1/2 sum_{i+j=m-1} (2i+1)!!(2j+1)!! d^2/dT_i dT_j
// truncated to the window. deg L_m = -2m.
ModeOperator make_virasoro(int sector, int m, const Window& w);

// L^alpha_k = 1/2 L_k - ((2k+2alpha+1)!!/2) hbar^-1 d/dT_{k+alpha} + delta_{k,0}/16,
// defined for k >= -alpha.
ModeOperator make_constrained_virasoro(int sector, int alpha, int k, const Window& w);

// W_alpha = 1/(2alpha+1) sum_k (T_k/(2k-1)!!) (L_{k-alpha} + delta_{k,alpha}/8).
ModeOperator make_W_alpha(int sector, int alpha, const Window& w);

// sum_a sqrt_delta[a] * W_{alpha[a]} acting in sector a (1-based vectors).
ModeOperator make_W_Delta(const std::vector<int>& alpha, const std::vector<Rat>& sqrt_delta,
                          const Window& w);

// Euler grading operator sum (2k+1) T_k^a d/dT_k^a over all sectors.
ModeOperator make_euler(int num_sectors, const Window& w);

}  // namespace caj
