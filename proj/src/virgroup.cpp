#include "caj/virgroup.hpp"

#include "caj/cutjoin.hpp"
#include "caj/generators.hpp"

#include <sstream>

namespace caj {

LaurentSeries v_from_translation(const GiventalData& d, int sector, int trunc_order) {
  const SectorData& s = d.sectors.at(static_cast<size_t>(sector) - 1);
  LaurentSeries v = LaurentSeries::zero(trunc_order);
  for (const auto& [k, dt] : s.delta_T) {
    if (dt == 0 || 2 * k + 1 > trunc_order) continue;
    Rat c = s.sqrt_delta * dt / Rat(double_fact(2L * k + 1));
    v = v + LaurentSeries::monomial(2 * k + 1, c, trunc_order);
  }
  return v;
}

LaurentSeries f_from_v(int alpha, const LaurentSeries& v) {
  if (alpha != 0 && alpha != 1) throw std::invalid_argument("f_from_v: alpha must be 0 or 1");
  if (!v.has_parity(1)) throw std::invalid_argument("f_from_v: v must be odd");
  if (!v.is_zero() && *v.valuation() < 3 + 2 * alpha)
    throw std::invalid_argument("f_from_v: v must have valuation >= 3+2*alpha");
  int root = 2 * alpha + 1;
  LaurentSeries u = v.scaled(Rat(-root)).shifted(-root);  // -(2a+1) v / z^{2a+1}
  return binomial_power(u, root).shifted(1);
}

namespace {

LaurentSeries flow_step(const std::map<int, Rat>& chi, const LaurentSeries& s) {
  LaurentSeries d = s.derivative();
  LaurentSeries out = LaurentSeries::zero(s.truncation_order());
  for (const auto& [k, c] : chi) {
    if (c == 0) continue;
    // l_k = -z^{2k+1} d/dz
    out = out + d.shifted(2 * k + 1).scaled(-c).truncated(s.truncation_order());
  }
  return out;
}

}  // namespace

LaurentSeries f_from_chi(const std::map<int, Rat>& chi, int trunc_order) {
  for (const auto& [k, c] : chi)
    if (k < 1) throw std::invalid_argument("f_from_chi: chi support must be positive");
  LaurentSeries acc = LaurentSeries::monomial(1, 1, trunc_order);
  LaurentSeries cur = acc;
  for (int n = 1; !cur.is_zero(); ++n) {
    cur = flow_step(chi, cur).scaled(Rat(1, n));
    acc = acc + cur;
  }
  return acc;
}

std::map<int, Rat> chi_from_f(const LaurentSeries& f, int chi_max) {
  auto val = f.valuation();
  if (!val || *val != 1 || f.coeff(1) != 1 || !f.has_parity(1))
    throw std::invalid_argument("chi_from_f: f must lie in z + z^3 C[[z^2]]");
  if (2 * chi_max + 1 > f.truncation_order())
    throw std::invalid_argument("chi_from_f: truncation order too small for chi_max");
  std::map<int, Rat> chi;
  for (int k = 1; k <= chi_max; ++k) {
    // adding chi_k contributes -chi_k to the z^{2k+1} coefficient at leading order
    LaurentSeries g = f_from_chi(chi, f.truncation_order());
    Rat mismatch = f.coeff(2 * k + 1) - g.coeff(2 * k + 1);
    if (mismatch != 0) chi[k] = -mismatch;
  }
  return chi;
}

VirGroupElement make_virgroup_element(const GiventalData& d, int sector, int trunc_order,
                                      int chi_max) {
  VirGroupElement e;
  e.sector = sector;
  int alpha = d.sectors.at(static_cast<size_t>(sector) - 1).alpha;
  LaurentSeries v = v_from_translation(d, sector, trunc_order);
  e.f = f_from_v(alpha, v);
  e.h = series_reverse(e.f);
  e.chi = chi_from_f(e.f, chi_max);
  return e;
}

HbarSeries apply_V(const std::vector<VirGroupElement>& elements, const HbarSeries& s,
                   int sign) {
  int lvl = 0;
  for (int m = 0; m <= s.order(); ++m) lvl = std::max(lvl, s.at(m).max_level());
  Window w{lvl, 1 << 20, lvl};
  ModeOperator g;
  for (const auto& e : elements) {
    for (const auto& [k, c] : e.chi) {
      if (k < 1) throw std::invalid_argument("apply_V: chi support must be positive");
      if (c != 0) g += make_virasoro(e.sector, k, w).scaled(c * sign);
    }
  }
  HbarSeries out = s;
  for (int m = 0; m <= s.order(); ++m) {
    TPolynomial cur = s.at(m);
    Rat inv_fact = 1;
    for (int n = 1; !cur.is_zero(); ++n) {
      cur = g.apply_poly(cur);
      inv_fact /= n;
      out.at(m) += cur.scaled(inv_fact);
    }
  }
  return out;
}

VirtosReport check_virtos(const GiventalData& d, int sector, int K) {
  VirtosReport rep;
  const SectorData& sec = d.sectors.at(static_cast<size_t>(sector) - 1);
  // single-sector view: only this sector's translations act
  GiventalData dd;
  dd.N = d.N;
  dd.order_K = K;
  dd.sectors.assign(d.sectors.begin(), d.sectors.end());
  for (auto& s : dd.sectors) s.delta_T.clear();
  dd.sectors[static_cast<size_t>(sector) - 1].delta_T = sec.delta_T;

  int inner = K + dd.translation_jmax(K);
  HbarSeries tau = tau_alpha_sector(sector, sec.alpha, inner);
  HbarSeries translated = apply_T(dd, tau, K, TranslationScaling::sqrt_delta);

  int chi_max = ((2 * sec.alpha + 1) * K) / 2 + 1;
  VirGroupElement e = make_virgroup_element(dd, sector, 2 * chi_max + 5, chi_max);
  HbarSeries grouped = apply_V({e}, tau.truncated(K));

  for (int m = 0; m <= K; ++m) {
    TPolynomial diff = translated.at(m) - grouped.at(m);
    if (!diff.is_zero()) {
      std::ostringstream os;
      os << "sector " << sector << ": paths differ at hbar^" << m << ", monomial "
         << monomial_to_string(diff.terms().begin()->first);
      rep.detail = os.str();
      return rep;
    }
  }
  rep.ok = true;
  rep.detail = "sector " + std::to_string(sector) + ": translation and Virasoro-group paths agree through hbar^" + std::to_string(K);
  return rep;
}

}  // namespace caj
