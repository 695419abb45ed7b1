#include "caj/tpoly.hpp"

#include <algorithm>
#include <sstream>

namespace caj {

long monomial_degree(const Monomial& m) {
  long d = 0;
  for (const auto& vp : m) d += static_cast<long>(2 * vp.var.level + 1) * vp.exp;
  return d;
}

std::string monomial_to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& vp : m) {
    if (!first) os << " * ";
    first = false;
    os << "T[" << vp.var.sector << "][" << vp.var.level << "]^" << vp.exp;
  }
  return os.str();
}

TPolynomial TPolynomial::constant(const Rat& c) {
  TPolynomial p;
  p.add_term({}, c);
  return p;
}

TPolynomial TPolynomial::variable(int sector, int level) {
  TPolynomial p;
  p.add_term({{{sector, level}, 1}}, 1);
  return p;
}

TPolynomial TPolynomial::monomial_term(const Monomial& m, const Rat& c) {
  TPolynomial p;
  p.add_term(m, c);
  return p;
}

void TPolynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat TPolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<long> TPolynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

std::map<long, TPolynomial> TPolynomial::graded_parts() const {
  std::map<long, TPolynomial> out;
  for (const auto& [m, c] : terms_) out[monomial_degree(m)].add_term(m, c);
  return out;
}

TPolynomial TPolynomial::homogeneous_part(long d) const {
  TPolynomial out;
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) == d) out.add_term(m, c);
  return out;
}

int TPolynomial::max_level() const {
  int lvl = -1;
  for (const auto& [m, c] : terms_)
    for (const auto& vp : m) lvl = std::max(lvl, vp.var.level);
  return lvl;
}

TPolynomial TPolynomial::derivative(int sector, int level) const {
  VarIndex v{sector, level};
  TPolynomial out;
  for (const auto& [m, c] : terms_) {
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].var != v) continue;
      Monomial n = m;
      Rat nc = c * m[i].exp;
      if (n[i].exp == 1)
        n.erase(n.begin() + i);
      else
        n[i].exp -= 1;
      out.add_term(n, nc);
      break;
    }
  }
  return out;
}

TPolynomial TPolynomial::mul_var(int sector, int level, int exp) const {
  VarIndex v{sector, level};
  TPolynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    auto it = std::lower_bound(n.begin(), n.end(), VarPow{v, 0},
                               [](const VarPow& a, const VarPow& b) { return a.var < b.var; });
    if (it != n.end() && it->var == v)
      it->exp += exp;
    else
      n.insert(it, VarPow{v, exp});
    out.add_term(n, c);
  }
  return out;
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TPolynomial TPolynomial::scaled(const Rat& f) const {
  TPolynomial out;
  if (f == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * f);
  return out;
}

TPolynomial operator+(const TPolynomial& a, const TPolynomial& b) {
  TPolynomial s = a;
  s += b;
  return s;
}

TPolynomial operator-(const TPolynomial& a, const TPolynomial& b) {
  TPolynomial s = a;
  s -= b;
  return s;
}

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
  TPolynomial out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      auto i = ma.begin();
      auto j = mb.begin();
      while (i != ma.end() && j != mb.end()) {
        if (i->var < j->var)
          m.push_back(*i++);
        else if (j->var < i->var)
          m.push_back(*j++);
        else {
          m.push_back(VarPow{i->var, i->exp + j->exp});
          ++i;
          ++j;
        }
      }
      m.insert(m.end(), i, ma.end());
      m.insert(m.end(), j, mb.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::string TPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c);
    if (!m.empty()) os << " " << monomial_to_string(m);
  }
  return os.str();
}

HbarSeries HbarSeries::one(int order) {
  HbarSeries s(order);
  s.c[0] = TPolynomial::constant(1);
  return s;
}

HbarSeries HbarSeries::truncated(int order) const {
  HbarSeries s(std::min(order, this->order()));
  for (int m = 0; m <= s.order(); ++m) s.c[static_cast<size_t>(m)] = c[static_cast<size_t>(m)];
  return s;
}

HbarSeries HbarSeries::scaled(const Rat& f) const {
  HbarSeries s = *this;
  for (auto& p : s.c) p = p.scaled(f);
  return s;
}

HbarSeries operator+(const HbarSeries& a, const HbarSeries& b) {
  HbarSeries s(std::min(a.order(), b.order()));
  for (int m = 0; m <= s.order(); ++m) s.at(m) = a.at(m) + b.at(m);
  return s;
}

HbarSeries operator-(const HbarSeries& a, const HbarSeries& b) {
  HbarSeries s(std::min(a.order(), b.order()));
  for (int m = 0; m <= s.order(); ++m) s.at(m) = a.at(m) - b.at(m);
  return s;
}

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
  HbarSeries s(std::min(a.order(), b.order()));
  for (int m = 0; m <= s.order(); ++m)
    for (int i = 0; i <= m; ++i) {
      if (a.at(i).is_zero() || b.at(m - i).is_zero()) continue;
      s.at(m) += a.at(i) * b.at(m - i);
    }
  return s;
}

TPolynomial substitute_basis(const TPolynomial& p, const RatMatrix& psi) {
  psi.inverse();  // rejects singular psi
  TPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    TPolynomial acc = TPolynomial::constant(c);
    for (const auto& vp : m) {
      TPolynomial image;
      for (int b = 1; b <= psi.size(); ++b) {
        const Rat& f = psi.at(vp.var.sector - 1, b - 1);
        if (f != 0) image += TPolynomial::variable(b, vp.var.level).scaled(f);
      }
      for (int e = 0; e < vp.exp; ++e) acc = acc * image;
    }
    out += acc;
  }
  return out;
}

HbarSeries substitute_basis(const HbarSeries& s, const RatMatrix& psi) {
  psi.inverse();  // rejects singular psi
  HbarSeries out(s.order());
  for (int m = 0; m <= s.order(); ++m)
    if (!s.at(m).is_zero()) out.at(m) = substitute_basis(s.at(m), psi);
  return out;
}

}  // namespace caj
