#include "caj/virasoro.hpp"

#include "caj/generators.hpp"
#include "caj/virgroup.hpp"

#include <sstream>

namespace caj {

namespace {

// Conjugation by the per-sector hbar rescaling: an hbar^s term picks up
// sqrt_delta^s.
ModeOperator delta_conjugate(const ModeOperator& op, const Rat& sqrt_delta) {
  ModeOperator out;
  for (const auto& [k, c] : op.terms()) {
    Rat f = c;
    for (int s = 0; s < k.hbar; ++s) f *= sqrt_delta;
    for (int s = 0; s > k.hbar; --s) f /= sqrt_delta;
    out.add_term(k, f);
  }
  return out;
}

}  // namespace

VirasoroFamily build_L_family(const GiventalData& d, int m_max, const Window& w) {
  ValidationReport rep = validate(d);
  if (!rep.ok())
    throw std::invalid_argument("build_L_family: invalid data\n" + rep.to_string());
  Window slack = w.with_creator_slack();
  ModeOperator rhat;
  if (d.has_r()) rhat = r_hat_operator(d, slack);
  VirasoroFamily fam;
  fam.data = d;
  fam.window = w;
  fam.m_max = m_max;
  for (int a = 1; a <= d.N; ++a) {
    const SectorData& sec = d.sectors[static_cast<size_t>(a) - 1];
    for (int m = -sec.alpha; m <= m_max; ++m) {
      ModeOperator op = make_constrained_virasoro(a, sec.alpha, m, slack);
      op = delta_conjugate(op, sec.sqrt_delta);
      // translation conjugation terminates at first order:
      // + (1/2hbar) sum ((2m+2m'+1)!!/(2m'-1)!!) DT_{m'} d/dT_{m+m'}
      // which collapses to DT_{m'}/(2 (2m'-1)!!) J_{m+m'+1} in modes.
      for (const auto& [mp, dt] : sec.delta_T) {
        if (dt == 0 || m + mp + 1 > slack.annihilator_mode_max()) continue;
        Rat c = dt / (Rat(2) * Rat(double_fact(2L * mp - 1)));
        op += ModeOperator::term(c, -1, {ModeIndex{a, m + mp + 1}});
      }
      if (d.has_r()) op = conjugate_by_exponential(op, rhat, slack);
      fam.ops.emplace(std::pair{a, m}, op.windowed(w));
    }
  }
  return fam;
}

ConstraintReport check_constraints(const VirasoroFamily& fam, const HbarSeries& z, int K) {
  ConstraintReport rep;
  for (const auto& [key, op] : fam.ops) {
    HbarSeries out = op.apply(z, K);
    for (int m = 0; m <= K; ++m) {
      if (out.at(m).is_zero()) continue;
      std::ostringstream os;
      os << "L[" << key.first << "][" << key.second << "] Z != 0 at hbar^" << m
         << ", first monomial " << monomial_to_string(out.at(m).terms().begin()->first)
         << " with coefficient " << rat_to_string(out.at(m).terms().begin()->second);
      rep.detail = os.str();
      return rep;
    }
  }
  rep.ok = true;
  std::ostringstream os;
  os << "all " << fam.ops.size() << " family members annihilate Z through hbar^" << K;
  rep.detail = os.str();
  return rep;
}

namespace {

// hbar^-1 single-derivative entries of a family operator: (sector, level) -> coeff.
std::map<std::pair<int, int>, Rat> hbar_tail(const ModeOperator& op) {
  std::map<std::pair<int, int>, Rat> tail;
  for (const auto& [k, c] : op.terms()) {
    if (k.hbar != -1) continue;
    if (!k.cre.empty() || k.ann.size() != 1)
      throw std::logic_error("hbar^-1 sector of a Virasoro family member is not linear");
    tail[{k.ann[0].sector, k.ann[0].mode - 1}] = c;
  }
  return tail;
}

}  // namespace

KFamily build_K_family(const VirasoroFamily& fam, const Window& w) {
  const GiventalData& d = fam.data;
  KFamily out;
  for (const auto& [key, base] : fam.ops) {
    auto [a, k] = key;
    int alpha_a = d.sectors[static_cast<size_t>(a) - 1].alpha;
    int lead_level = k + alpha_a;
    if (lead_level > w.level_max) continue;  // K~ beyond representable levels
    ModeOperator khat = base;
    // eliminate non-leading hbar^-1 entries in increasing level order; the
    // member with leading level ell is L^b_{ell - alpha_b}
    while (true) {
      auto tail = hbar_tail(khat);
      std::pair<int, int> target{-1, -1};
      for (const auto& [bl, c] : tail) {
        if (bl.first == a && bl.second == lead_level) continue;
        // conjugation only raises levels, so everything else sits strictly above
        if (bl.second <= lead_level)
          throw std::logic_error("build_K_family: hbar^-1 entry at or below the leading level");
        if (target.first < 0 || bl.second < target.second ||
            (bl.second == target.second && bl.first < target.first))
          target = {bl.first, bl.second};
      }
      if (target.first < 0) break;
      int b = target.first;
      int ell = target.second;
      int alpha_b = d.sectors[static_cast<size_t>(b) - 1].alpha;
      int mprime = ell - alpha_b;
      auto it = fam.ops.find({b, mprime});
      if (it == fam.ops.end())
        throw std::invalid_argument("build_K_family: family depth m_max too small");
      // leading hbar^-1 coefficient of any member is -1/(2 sqrt_delta_b)
      Rat lead = Rat(-1, 2) / d.sectors[static_cast<size_t>(b) - 1].sqrt_delta;
      khat += it->second.scaled(-tail.at(target) / lead);
    }
    out.khat.emplace(key, khat);

    // K~ lives on levels; only k >= -alpha with lead_level >= 0 contribute
    int level = lead_level;
    Rat scale = Rat(2) * d.sectors[static_cast<size_t>(a) - 1].sqrt_delta /
                Rat(double_fact(2L * level + 1));
    ModeOperator kt = khat.scaled(scale);
    kt += ModeOperator::term(Rat(1) / Rat(double_fact(2L * level + 1)), -1,
                             {ModeIndex{a, level + 1}});
    for (const auto& [tk, tc] : kt.terms())
      if (tk.hbar != 0) throw std::logic_error("build_K_family: K~ is not hbar-free");
    out.ktilde.emplace(std::pair{a, level}, kt);
  }
  return out;
}

ModeOperator build_H(const GiventalData& d, const Window& w) {
  Window slack = w.with_creator_slack();
  ModeOperator core;
  for (int a = 1; a <= d.N; ++a) {
    int alpha = d.sectors[static_cast<size_t>(a) - 1].alpha;
    core += make_virasoro(a, 0, slack).scaled(Rat(1, 2 * alpha + 1));
  }
  if (d.has_translations()) {
    int chi_max = slack.degree_cap / 2 + 2;
    for (int a = 1; a <= d.N; ++a) {
      if (d.sectors[static_cast<size_t>(a) - 1].delta_T.empty()) continue;
      VirGroupElement e = make_virgroup_element(d, a, 2 * chi_max + 5, chi_max);
      ModeOperator g;
      for (const auto& [k, c] : e.chi)
        if (c != 0) g += make_virasoro(a, k, slack).scaled(c);
      if (!g.is_zero()) core = conjugate_by_exponential(core, g, slack);
    }
  }
  if (d.has_r())
    core = conjugate_by_exponential(core, r_hat_operator(d, slack), slack);
  return core.windowed(w);
}

int default_family_m_max(const GiventalData& d, int K) {
  return std::max(K + 2, run_level_max(K, d.any_alpha_one()) + 1);
}

HbarSeries solve_from_constraints(const GiventalData& d, int K, int window_margin) {
  ValidationReport rep = validate(d);
  if (!rep.ok())
    throw std::invalid_argument("solve_from_constraints: invalid data\n" + rep.to_string());
  Window w = Window::for_order(K, d.any_alpha_one()).expanded(window_margin);
  VirasoroFamily fam = build_L_family(d, default_family_m_max(d, K) + window_margin, w);
  KFamily kfam = build_K_family(fam, w);
  ModeOperator euler_rhs;  // O = sum (2k+1) T_k^a K~_{k;a}
  for (const auto& [key, kt] : kfam.ktilde) {
    auto [a, k] = key;
    ModeOperator tk =
        ModeOperator::term(Rat(2 * k + 1) * Rat(double_fact(2L * k - 1)), 0, {ModeIndex{a, -k}});
    euler_rhs += normal_order_product(tk, kt);
  }
  euler_rhs = euler_rhs.windowed(w);
  ModeOperator h = build_H(d, w);

  HbarSeries z(K);
  z.at(0) = TPolynomial::constant(1);
  for (int m = 1; m <= K; ++m) {
    TPolynomial y = euler_rhs.apply_poly(z.at(m - 1));
    TPolynomial zm;
    for (const auto& [deg, part] : y.graded_parts()) {
      if (deg == 0)
        throw std::logic_error("solve_from_constraints: Euler image has a constant part");
      zm += part.scaled(Rat(1, static_cast<long>(deg)));
    }
    // degree-0 part from  m Z^(m) = [H Z^(m)]_0
    zm += TPolynomial::constant(h.apply_poly(zm).constant_term() / m);
    z.at(m) = std::move(zm);
  }
  return z;
}

}  // namespace caj
