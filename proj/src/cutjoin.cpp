#include "caj/cutjoin.hpp"

#include "caj/generators.hpp"
#include "caj/virgroup.hpp"

#include <sstream>

namespace caj {

ModeOperator CutJoinOperator::to_mode_operator() const {
  ModeOperator op;
  for (const auto& [t, c] : cubic)
    op += ModeOperator::term(c, 0, {t[0], t[1], t[2]});
  for (const auto& [m, c] : linear) op += ModeOperator::term(c, 0, {m});
  return op;
}

CutJoinOperator CutJoinOperator::pack(const ModeOperator& op, const Window& w) {
  CutJoinOperator out;
  out.window = w;
  for (const auto& [k, c] : op.terms()) {
    if (k.hbar != 0)
      throw std::invalid_argument("CutJoinOperator::pack: term carries an hbar power");
    std::vector<ModeIndex> modes = k.cre;
    modes.insert(modes.end(), k.ann.begin(), k.ann.end());
    if (modes.size() == 3) {
      out.cubic[{modes[0], modes[1], modes[2]}] = c;
    } else if (modes.size() == 1) {
      out.linear[modes[0]] = c;
    } else {
      throw std::invalid_argument("CutJoinOperator::pack: term arity is not 1 or 3");
    }
  }
  return out;
}

std::string CutJoinOperator::export_table() const {
  std::ostringstream os;
  for (const auto& [t, c] : cubic) {
    os << "A " << t[0].sector << " " << t[1].sector << " " << t[2].sector << " " << t[0].mode
       << " " << t[1].mode << " " << t[2].mode << " " << rat_to_string(c) << "\n";
  }
  for (const auto& [m, c] : linear)
    os << "B " << m.sector << " " << m.mode << " " << rat_to_string(c) << "\n";
  return os.str();
}

ResidueCoeffs coefficients_AV_BV(const GiventalData& d, int sector, const Window& w) {
  const SectorData& sec = d.sectors.at(static_cast<size_t>(sector) - 1);
  int alpha = sec.alpha;
  const Rat& sd = sec.sqrt_delta;
  int i_min = -w.creator_cap;
  int i_max = w.annihilator_mode_max();
  int j_max = 2 * w.annihilator_mode_max() - 1;

  int lord = 2 * (std::max(-i_min, i_max) + j_max) + 2 * alpha + 5;
  LaurentSeries v = v_from_translation(d, sector, lord);
  LaurentSeries f = f_from_v(alpha, v);
  LaurentSeries h = series_reverse(f);
  LaurentSeries hp = h.derivative();
  LaurentSeries hp2 = hp * hp;

  std::map<int, LaurentSeries> hpow;  // h^e
  auto h_pow = [&](int e) -> const LaurentSeries& {
    auto it = hpow.find(e);
    if (it == hpow.end()) it = hpow.emplace(e, h.pow(e)).first;
    return it->second;
  };

  ResidueCoeffs out;
  Rat pref = sd / Rat(2 * alpha + 1);
  for (int i = i_min; i <= i_max; ++i) {
    LaurentSeries left = (hp * h_pow(-2 * i)).plus_part();
    if (left.is_zero()) continue;
    for (int j = -alpha; j <= j_max; ++j) {
      if (i < -j - alpha) continue;  // support bound of the conjugated current
      LaurentSeries prod = left * (hp2 * h_pow(-2 * j - 2));
      Rat a = pref * residue(prod.shifted(1 - 2 * alpha));
      if (a != 0) out.A[{i, j}] = a;
    }
  }

  // C_a(0) enters only for alpha = 1, as (Delta/30) DT_2.
  Rat c0 = 0;
  if (alpha == 1) {
    auto it = sec.delta_T.find(2);
    if (it != sec.delta_T.end()) c0 = sd * sd * it->second / 30;
  }
  for (int j = -alpha; j <= j_max; ++j) {
    LaurentSeries base = hp * h_pow(-2 * j);
    Rat b = c0 * residue(base.shifted(-1));
    b += sd / 8 * residue(base.shifted(-1 - 2 * alpha));
    b = b / Rat(2 * alpha + 1);
    if (b != 0) out.B[j] = b;
  }
  return out;
}

ModeOperator assemble_W_V(const GiventalData& d, const Window& w) {
  ModeOperator op;
  for (int a = 1; a <= d.N; ++a) {
    ResidueCoeffs rc = coefficients_AV_BV(d, a, w);
    for (const auto& [ij, c] : rc.A) {
      ModeOperator ji = ModeOperator::mode(a, ij.first);
      op += normal_order_product(ji, make_virasoro(a, ij.second, w)).scaled(c);
    }
    for (const auto& [j, c] : rc.B) op += ModeOperator::mode(a, j).scaled(c);
  }
  return op.windowed(w);
}

CutJoinOperator conjugate_W(const GiventalData& d, const ModeOperator& w_v, const Window& w) {
  Window slack = w.with_creator_slack();
  ModeOperator conj = w_v;
  if (d.has_r()) {
    ModeOperator r = r_hat_operator(d, slack);
    conj = conjugate_by_exponential(w_v, r, slack);
  }
  return CutJoinOperator::pack(conj.windowed(w), w);
}

CutJoinOperator build_cut_and_join(const GiventalData& d, int window_margin) {
  ValidationReport rep = validate(d);
  if (!rep.ok())
    throw std::invalid_argument("build_cut_and_join: invalid data\n" + rep.to_string());
  Window w = Window::for_order(d.order_K, d.any_alpha_one()).expanded(window_margin);
  ModeOperator w_v = assemble_W_V(d, w.with_creator_slack());
  return conjugate_W(d, w_v, w);
}

HbarSeries run_recursion(const ModeOperator& w, int K) {
  HbarSeries z(K);
  z.at(0) = TPolynomial::constant(1);
  for (int m = 1; m <= K; ++m)
    z.at(m) = w.apply_poly(z.at(m - 1)).scaled(Rat(1, m));
  return z;
}

HbarSeries run_recursion(const CutJoinOperator& w, int K) {
  ModeOperator op = w.to_mode_operator();
  long maxdeg = 0;
  for (const auto& [k, c] : op.terms()) maxdeg = std::max(maxdeg, term_degree(k));
  if (w.window.level_max < run_level_max(K, maxdeg >= 3))
    throw std::invalid_argument("run_recursion: operator window inadequate for K");
  return run_recursion(op, K);
}

HbarSeries tau_alpha(int alpha, int K) { return tau_alpha_sector(1, alpha, K); }

HbarSeries tau_alpha_sector(int sector, int alpha, int K) {
  Window w = Window::for_order(K, alpha == 1);
  return run_recursion(make_W_alpha(sector, alpha, w), K);
}

ModeOperator ambiguity_operator(const AmbiguityKey& key, const KtildeMap& ktilde,
                                const Window& w) {
  auto [a, k, b, m] = std::tuple{key[0], key[1], key[2], key[3]};
  if (m + 1 > w.annihilator_mode_max() || k + 1 > w.annihilator_mode_max())
    throw std::invalid_argument("ambiguity_operator: index outside window");
  auto deriv = [&](int sec, int lvl) {
    return ModeOperator::term(Rat(1) / Rat(double_fact(2L * lvl + 1)), 0,
                              {ModeIndex{sec, lvl + 1}});
  };
  ModeOperator op = normal_order_product(deriv(a, m), ktilde.at({b, k}));
  op -= normal_order_product(deriv(b, k), ktilde.at({a, m}));
  return op.windowed(w);
}

CutJoinOperator ambiguity_shift(const CutJoinOperator& w, const std::map<AmbiguityKey, Rat>& C,
                                const KtildeMap& ktilde) {
  ModeOperator op = w.to_mode_operator();
  for (const auto& [key, c] : C) {
    if (key[1] < 0 || key[3] < 0)
      throw std::invalid_argument("ambiguity_shift: levels must be non-negative");
    if (c != 0) op += ambiguity_operator(key, ktilde, w.window).scaled(c);
  }
  return CutJoinOperator::pack(op.windowed(w.window), w.window);
}

}  // namespace caj
