#include "caj/generators.hpp"

namespace caj {

ModeOperator make_virasoro(int sector, int m, const Window& w) {
  // L_m = 1/2 sum_{p+q=m+1} :J_p J_q:, which expands to the three T/d blocks.
  ModeOperator op;
  for (int p = -w.creator_cap; 2 * p <= m + 1; ++p) {
    int q = m + 1 - p;
    if (q > 0 && q > w.annihilator_mode_max()) continue;
    if (q <= 0 && -q > w.creator_cap) continue;
    Rat c = (p == q) ? Rat(1, 2) : Rat(1);
    op += ModeOperator::term(c, 0, {ModeIndex{sector, p}, ModeIndex{sector, q}});
  }
  return op.windowed(w);
}

ModeOperator make_constrained_virasoro(int sector, int alpha, int k, const Window& w) {
  if (alpha != 0 && alpha != 1)
    throw std::invalid_argument("make_constrained_virasoro: alpha must be 0 or 1");
  if (k < -alpha)
    throw std::invalid_argument("make_constrained_virasoro: requires k >= -alpha");
  ModeOperator op = make_virasoro(sector, k, w).scaled(Rat(1, 2));
  // -((2k+2alpha+1)!!/2hbar) d/dT_{k+alpha} collapses to -(1/2hbar) J_{k+alpha+1}
  op += ModeOperator::term(Rat(-1, 2), -1, {ModeIndex{sector, k + alpha + 1}});
  if (k == 0) op += ModeOperator::constant(Rat(1, 16));
  return op.windowed(w);
}

ModeOperator make_W_alpha(int sector, int alpha, const Window& w) {
  if (alpha != 0 && alpha != 1)
    throw std::invalid_argument("make_W_alpha: alpha must be 0 or 1");
  ModeOperator op;
  for (int k = 0; k <= w.creator_cap; ++k) {
    // T_k/(2k-1)!! is exactly J_{-k}
    ModeOperator tk = ModeOperator::mode(sector, -k);
    op += normal_order_product(tk, make_virasoro(sector, k - alpha, w));
    if (k == alpha) op += tk.scaled(Rat(1, 8));
  }
  return op.scaled(Rat(1, 2 * alpha + 1)).windowed(w);
}

ModeOperator make_W_Delta(const std::vector<int>& alpha, const std::vector<Rat>& sqrt_delta,
                          const Window& w) {
  if (alpha.size() != sqrt_delta.size())
    throw std::invalid_argument("make_W_Delta: alpha/sqrt_delta size mismatch");
  ModeOperator op;
  for (size_t a = 0; a < alpha.size(); ++a) {
    if (sqrt_delta[a] == 0) throw std::invalid_argument("make_W_Delta: zero sqrt_delta");
    op += make_W_alpha(static_cast<int>(a) + 1, alpha[a], w).scaled(sqrt_delta[a]);
  }
  return op;
}

ModeOperator make_euler(int num_sectors, const Window& w) {
  ModeOperator op;
  for (int a = 1; a <= num_sectors; ++a)
    for (int k = 0; k <= w.level_max; ++k)
      // (2k+1) T_k d/dT_k has unit coefficient in modes
      op += ModeOperator::term(1, 0, {ModeIndex{a, -k}, ModeIndex{a, k + 1}});
  return op;
}

}  // namespace caj
