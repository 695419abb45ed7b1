#include "caj/modeops.hpp"

#include <algorithm>
#include <sstream>

namespace caj {

long term_degree(const ModeKey& k) {
  long d = 0;
  for (const auto& m : k.cre) d += 1 - 2L * m.mode;
  for (const auto& m : k.ann) d += 1 - 2L * m.mode;
  return d;
}

int run_level_max(int order_K, bool any_alpha_one) {
  // largest level whose variable degree 2l+1 fits the degree bound (2a+1)K
  int cap = any_alpha_one ? 3 * order_K : order_K;
  return std::max(0, (cap - 1) / 2);
}

Window Window::for_order(int order_K, bool any_alpha_one) {
  Window w;
  w.level_max = run_level_max(order_K, any_alpha_one);
  w.degree_cap = any_alpha_one ? 3 * order_K : order_K;
  w.creator_cap = w.level_max;
  return w;
}

Window Window::expanded(int extra) const {
  return Window{level_max + extra, degree_cap + 2 * extra, creator_cap + extra};
}

Window Window::with_creator_slack() const {
  Window w = *this;
  w.creator_cap = level_max + (degree_cap + 3) / 2 + 1;
  return w;
}

ModeOperator ModeOperator::constant(const Rat& c) {
  ModeOperator op;
  op.add_term(ModeKey{}, c);
  return op;
}

ModeOperator ModeOperator::mode(int sector, int k) {
  return term(1, 0, {ModeIndex{sector, k}});
}

ModeOperator ModeOperator::term(const Rat& coeff, int hbar, std::vector<ModeIndex> modes) {
  ModeKey key;
  key.hbar = hbar;
  for (const auto& m : modes) (m.mode <= 0 ? key.cre : key.ann).push_back(m);
  std::sort(key.cre.begin(), key.cre.end());
  std::sort(key.ann.begin(), key.ann.end());
  ModeOperator op;
  op.add_term(std::move(key), coeff);
  return op;
}

void ModeOperator::add_term(ModeKey key, const Rat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ModeOperator& ModeOperator::operator+=(const ModeOperator& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ModeOperator& ModeOperator::operator-=(const ModeOperator& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ModeOperator ModeOperator::scaled(const Rat& f) const {
  ModeOperator op;
  if (f == 0) return op;
  for (const auto& [k, c] : terms_) op.terms_.emplace(k, c * f);
  return op;
}

ModeOperator ModeOperator::hbar_shifted(int shift) const {
  ModeOperator op;
  for (const auto& [k, c] : terms_) {
    ModeKey key = k;
    key.hbar += shift;
    op.terms_.emplace(std::move(key), c);
  }
  return op;
}

ModeOperator ModeOperator::windowed(const Window& w) const {
  ModeOperator op;
  for (const auto& [k, c] : terms_) {
    if (term_degree(k) < -static_cast<long>(w.degree_cap)) continue;
    bool keep = true;
    for (const auto& m : k.ann)
      if (m.mode > w.annihilator_mode_max()) {
        keep = false;
        break;
      }
    for (const auto& m : k.cre)
      if (keep && -m.mode > w.creator_cap) {
        keep = false;
        break;
      }
    if (keep) op.terms_.emplace(k, c);
  }
  return op;
}

int ModeOperator::min_hbar_shift() const {
  int s = 0;
  for (const auto& [k, c] : terms_) s = std::min(s, k.hbar);
  return s;
}

int ModeOperator::max_exact_order(int input_order) const {
  return input_order + min_hbar_shift();
}

ModeOperator operator+(const ModeOperator& a, const ModeOperator& b) {
  ModeOperator s = a;
  s += b;
  return s;
}

ModeOperator operator-(const ModeOperator& a, const ModeOperator& b) {
  ModeOperator s = a;
  s -= b;
  return s;
}

namespace {

TPolynomial apply_term(const ModeKey& key, const Rat& coeff, const TPolynomial& p) {
  TPolynomial cur = p;
  for (const auto& m : key.ann) {
    cur = cur.derivative(m.sector, m.mode - 1);
    if (cur.is_zero()) return cur;
    cur = cur.scaled(Rat(double_fact(2L * m.mode - 1)));
  }
  for (const auto& m : key.cre) {
    cur = cur.mul_var(m.sector, -m.mode);
    cur = cur.scaled(Rat(1) / Rat(double_fact(-2L * m.mode - 1)));
  }
  return cur.scaled(coeff);
}

struct ContractionSlot {
  int weight_base;  // (2p-1) for annihilator mode p
  int alpha;        // multiplicity of J_p in the left term
  int beta;         // multiplicity of the partner J_{1-p} in the right term
  int sector;
  int p;
};

Int binom_int(long n, long k) {
  Int r = 1;
  for (long i = 0; i < k; ++i) r = r * Int(n - i) / Int(i + 1);
  return r;
}

}  // namespace

TPolynomial ModeOperator::apply_poly(const TPolynomial& p) const {
  TPolynomial out;
  for (const auto& [k, c] : terms_) {
    if (k.hbar != 0)
      throw std::invalid_argument("ModeOperator::apply_poly: operator carries hbar powers");
    out += apply_term(k, c, p);
  }
  return out;
}

HbarSeries ModeOperator::apply(const HbarSeries& s, int out_order) const {
  if (out_order > max_exact_order(s.order()))
    throw std::invalid_argument(
        "ModeOperator::apply: hbar shift needs input coefficients beyond the series order");
  HbarSeries out(out_order);
  for (const auto& [k, c] : terms_) {
    for (int m = 0; m <= out_order; ++m) {
      int n = m - k.hbar;
      if (n < 0 || n > s.order()) continue;
      if (s.at(n).is_zero()) continue;
      out.at(m) += apply_term(k, c, s.at(n));
    }
  }
  return out;
}

ModeOperator normal_order_product(const ModeOperator& a, const ModeOperator& b) {
  ModeOperator out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // Wick: move ka.ann past kb.cre, contracting J_p with J_{1-p} in the
      // same sector with weight (2p-1).
      std::vector<ContractionSlot> slots;
      for (size_t i = 0; i < ka.ann.size();) {
        size_t j = i;
        while (j < ka.ann.size() && ka.ann[j] == ka.ann[i]) ++j;
        const ModeIndex& mi = ka.ann[i];
        ModeIndex partner{mi.sector, 1 - mi.mode};
        int beta = static_cast<int>(
            std::count(kb.cre.begin(), kb.cre.end(), partner));
        if (beta > 0)
          slots.push_back({2 * mi.mode - 1, static_cast<int>(j - i), beta, mi.sector, mi.mode});
        i = j;
      }
      // Enumerate how many pairs to contract in each slot.
      std::vector<int> choice(slots.size(), 0);
      while (true) {
        Rat factor = ca * cb;
        for (size_t g = 0; g < slots.size(); ++g) {
          int t = choice[g];
          if (t == 0) continue;
          Int ways = binom_int(slots[g].alpha, t) * binom_int(slots[g].beta, t);
          for (int i = 2; i <= t; ++i) ways *= i;
          Int w = 1;
          for (int i = 0; i < t; ++i) w *= Int(slots[g].weight_base);
          factor *= Rat(ways * w);
        }
        ModeKey key;
        key.hbar = ka.hbar + kb.hbar;
        key.cre = ka.cre;
        for (const auto& m : kb.cre) key.cre.push_back(m);
        key.ann = kb.ann;
        for (const auto& m : ka.ann) key.ann.push_back(m);
        // remove contracted copies
        for (size_t g = 0; g < slots.size(); ++g) {
          for (int t = 0; t < choice[g]; ++t) {
            ModeIndex am{slots[g].sector, slots[g].p};
            ModeIndex cm{slots[g].sector, 1 - slots[g].p};
            key.ann.erase(std::find(key.ann.begin(), key.ann.end(), am));
            key.cre.erase(std::find(key.cre.begin(), key.cre.end(), cm));
          }
        }
        std::sort(key.cre.begin(), key.cre.end());
        std::sort(key.ann.begin(), key.ann.end());
        out.add_term(std::move(key), factor);

        size_t g = 0;
        while (g < slots.size()) {
          if (choice[g] < std::min(slots[g].alpha, slots[g].beta)) {
            ++choice[g];
            break;
          }
          choice[g] = 0;
          ++g;
        }
        if (g == slots.size()) break;
      }
    }
  }
  return out;
}

ModeOperator commutator(const ModeOperator& a, const ModeOperator& b) {
  return normal_order_product(a, b) - normal_order_product(b, a);
}

ModeOperator conjugate_by_exponential(const ModeOperator& x, const ModeOperator& g,
                                      const Window& w) {
  for (const auto& [k, c] : g.terms()) {
    if (k.hbar != 0)
      throw std::invalid_argument("conjugate_by_exponential: exponent carries hbar powers");
    if (term_degree(k) >= 0)
      throw std::invalid_argument("conjugate_by_exponential: exponent has a degree >= 0 term");
  }
  ModeOperator acc = x.windowed(w);
  ModeOperator cur = acc;
  for (int n = 1; !cur.is_zero(); ++n) {
    cur = commutator(g, cur).scaled(Rat(1, n)).windowed(w);
    acc += cur;
  }
  return acc;
}

std::string ModeOperator::dump() const {
  std::ostringstream os;
  for (const auto& [k, c] : terms_) {
    os << rat_to_string(c) << " * hbar^" << k.hbar;
    for (const auto& m : k.cre) os << " J[" << m.sector << "][" << m.mode << "]";
    for (const auto& m : k.ann) os << " J[" << m.sector << "][" << m.mode << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace caj
