#include "caj/givental.hpp"

#include "caj/cutjoin.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace caj {

bool GiventalData::any_alpha_one() const {
  return std::any_of(sectors.begin(), sectors.end(),
                     [](const SectorData& s) { return s.alpha == 1; });
}

bool GiventalData::has_translations() const {
  return std::any_of(sectors.begin(), sectors.end(),
                     [](const SectorData& s) { return !s.delta_T.empty(); });
}

bool GiventalData::has_r() const {
  for (const auto& r : r_jets)
    for (int i = 0; i < r.size(); ++i)
      for (int j = 0; j < r.size(); ++j)
        if (r.at(i, j) != 0) return true;
  return false;
}

int GiventalData::translation_jmax(int K) const {
  // One translation in sector a removes degree >= 2*alpha_a+3 from the
  // sector-a part, which carries at most (2*alpha_a+1) per hbar order:
  // j <= rho(m+j) with rho = max (2a+1)/(2a+3) over translated sectors.
  bool any1 = false, any = false;
  for (const auto& s : sectors) {
    if (s.delta_T.empty()) continue;
    any = true;
    if (s.alpha == 1) any1 = true;
  }
  if (!any) return 0;
  return any1 ? (3 * K + 1) / 2 : (K + 1) / 2;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& i : issues) os << i.location << ": " << i.message << "\n";
  return os.str();
}

ValidationReport validate(const GiventalData& d) {
  ValidationReport rep;
  auto flag = [&](std::string loc, std::string msg) {
    rep.issues.push_back({std::move(loc), std::move(msg)});
  };
  if (d.N < 1) flag("N", "must be positive");
  if (static_cast<int>(d.sectors.size()) != d.N)
    flag("sectors", "size differs from N");
  if (d.order_K < 0) flag("order_K", "must be non-negative");
  for (size_t a = 0; a < d.sectors.size(); ++a) {
    const auto& s = d.sectors[a];
    std::string base = "sectors[" + std::to_string(a + 1) + "]";
    if (s.alpha != 0 && s.alpha != 1) flag(base + ".alpha", "must be 0 or 1");
    if (s.sqrt_delta == 0) flag(base + ".sqrt_delta", "must be nonzero");
    for (const auto& [k, v] : s.delta_T) {
      if (v == 0) continue;
      if (k < 1 + s.alpha)
        flag(base + ".delta_T[" + std::to_string(k) + "]",
             "support requires k >= 1+alpha (regular sectors have DT_1 = 0)");
    }
  }
  for (size_t j = 0; j < d.r_jets.size(); ++j) {
    const auto& r = d.r_jets[j];
    std::string base = "r_jets[" + std::to_string(j + 1) + "]";
    if (r.size() != d.N) {
      flag(base, "must be an N x N matrix");
      continue;
    }
    int k = static_cast<int>(j) + 1;
    RatMatrix want = r.transposed();
    bool good = true;
    for (int p = 0; p < d.N && good; ++p)
      for (int q = 0; q < d.N && good; ++q) {
        Rat expect = (k % 2 == 1) ? r.at(p, q) : -r.at(p, q);
        if (want.at(p, q) != expect) good = false;
      }
    if (!good)
      flag(base, k % 2 == 1 ? "odd jet must be self-adjoint (symmetric)"
                            : "even jet must be skew-self-adjoint (antisymmetric)");
  }
  return rep;
}

GiventalData from_local_curve(const LocalCurveData& c, int order_K) {
  GiventalData d;
  d.N = static_cast<int>(c.sectors.size());
  d.order_K = order_K;
  for (size_t a = 0; a < c.sectors.size(); ++a) {
    const auto& cs = c.sectors[a];
    SectorData s;
    s.alpha = cs.regular ? 1 : 0;
    int lead_index = 2 * s.alpha - 1;
    auto it = cs.y.find(lead_index);
    if (it == cs.y.end() || it->second == 0)
      throw std::invalid_argument("from_local_curve: sector " + std::to_string(a + 1) +
                                  " has zero leading coefficient y_" +
                                  std::to_string(lead_index));
    const Rat& lead = it->second;
    s.sqrt_delta = Rat(1) / lead;
    for (const auto& [k, yk] : cs.y) {
      if (k % 2 == 0 || yk == 0) continue;  // only odd y's enter the dictionary
      int level = (k + 1) / 2;              // y_{2m-1} translates T_m
      if (level < 1 + s.alpha) continue;    // DT_1 := 0 for regular sectors
      s.delta_T[level] = -Rat(double_fact(2L * level - 1)) * yk / lead;
    }
    d.sectors.push_back(std::move(s));
  }
  return d;
}

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known)
      throw std::invalid_argument("config: unknown field '" + it.key() + "' in " + where);
  }
}

Rat rat_field(const json& v, const std::string& where) {
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long long>());
  throw std::invalid_argument("config: " + where + " must be a \"p/q\" string or integer");
}

}  // namespace

GiventalData givental_from_json_text(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  reject_unknown(j, {"N", "order_K", "sectors", "r_jets"}, "top level");
  GiventalData d;
  d.N = j.at("N").get<int>();
  d.order_K = j.at("order_K").get<int>();
  if (!j.at("sectors").is_array())
    throw std::invalid_argument("config: sectors must be an array");
  int a = 0;
  for (const auto& js : j.at("sectors")) {
    ++a;
    std::string where = "sectors[" + std::to_string(a) + "]";
    reject_unknown(js, {"alpha", "sqrt_delta", "delta_T"}, where);
    SectorData s;
    s.alpha = js.at("alpha").get<int>();
    s.sqrt_delta = rat_field(js.at("sqrt_delta"), where + ".sqrt_delta");
    if (js.contains("delta_T")) {
      for (auto it = js.at("delta_T").begin(); it != js.at("delta_T").end(); ++it) {
        int k = std::stoi(it.key());
        Rat v = rat_field(it.value(), where + ".delta_T[" + it.key() + "]");
        if (v != 0) s.delta_T[k] = v;
      }
    }
    d.sectors.push_back(std::move(s));
  }
  if (j.contains("r_jets")) {
    int k = 0;
    for (const auto& jr : j.at("r_jets")) {
      ++k;
      std::string where = "r_jets[" + std::to_string(k) + "]";
      if (!jr.is_array() || static_cast<int>(jr.size()) != d.N)
        throw std::invalid_argument("config: " + where + " must have N rows");
      RatMatrix m(d.N);
      for (int r = 0; r < d.N; ++r) {
        const auto& row = jr.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != d.N)
          throw std::invalid_argument("config: " + where + " rows must have N entries");
        for (int c = 0; c < d.N; ++c)
          m.at(r, c) = rat_field(row.at(c), where);
      }
      d.r_jets.push_back(std::move(m));
    }
  }
  return d;
}

std::string givental_to_json_text(const GiventalData& d) {
  json j;
  j["N"] = d.N;
  j["order_K"] = d.order_K;
  j["sectors"] = json::array();
  for (const auto& s : d.sectors) {
    json js;
    js["alpha"] = s.alpha;
    js["sqrt_delta"] = rat_to_string(s.sqrt_delta);
    json dt = json::object();
    for (const auto& [k, v] : s.delta_T) dt[std::to_string(k)] = rat_to_string(v);
    js["delta_T"] = dt;
    j["sectors"].push_back(js);
  }
  j["r_jets"] = json::array();
  for (const auto& r : d.r_jets) {
    json rows = json::array();
    for (int p = 0; p < r.size(); ++p) {
      json row = json::array();
      for (int q = 0; q < r.size(); ++q) row.push_back(rat_to_string(r.at(p, q)));
      rows.push_back(row);
    }
    j["r_jets"].push_back(rows);
  }
  return j.dump(2);
}

HbarSeries apply_Delta_product(const GiventalData& d, const std::vector<HbarSeries>& tau) {
  if (static_cast<int>(tau.size()) != d.N)
    throw std::invalid_argument("apply_Delta_product: one series per sector expected");
  int order = tau.empty() ? 0 : tau[0].order();
  for (const auto& t : tau) order = std::min(order, t.order());
  HbarSeries acc = HbarSeries::one(order);
  for (int a = 0; a < d.N; ++a) {
    HbarSeries scaled(order);
    Rat f = 1;
    for (int m = 0; m <= order; ++m) {
      scaled.at(m) = tau[static_cast<size_t>(a)].at(m).scaled(f);
      f *= d.sectors[static_cast<size_t>(a)].sqrt_delta;
    }
    acc = acc * scaled;
  }
  return acc;
}

HbarSeries apply_T(const GiventalData& d, const HbarSeries& s, int out_order,
                   TranslationScaling scaling) {
  if (!d.has_translations()) return s.truncated(out_order);
  if (s.order() < out_order + d.translation_jmax(out_order))
    throw std::invalid_argument(
        "apply_T: input series order cannot certify exactness at the requested order");
  auto translate_once = [&](const TPolynomial& p) {
    TPolynomial next;
    for (int a = 1; a <= d.N; ++a) {
      const SectorData& sec = d.sectors[static_cast<size_t>(a) - 1];
      for (const auto& [k, v] : sec.delta_T) {
        Rat c = v;
        if (scaling == TranslationScaling::sqrt_delta) c *= sec.sqrt_delta;
        if (c != 0) next += p.derivative(a, k).scaled(c);
      }
    }
    return next;
  };
  HbarSeries out(out_order);
  std::vector<TPolynomial> cur;
  cur.reserve(static_cast<size_t>(s.order()) + 1);
  for (int n = 0; n <= s.order(); ++n) cur.push_back(s.at(n));
  Rat inv_fact = 1;
  for (int j = 0; j <= s.order(); ++j) {  // n = m+j <= s.order() caps j
    if (j > 0) {
      inv_fact /= j;
      bool all_zero = true;
      for (auto& p : cur) {
        p = translate_once(p);
        if (!p.is_zero()) all_zero = false;
      }
      if (all_zero) break;
    }
    for (int m = 0; m <= out_order && m + j <= s.order(); ++m)
      if (!cur[static_cast<size_t>(m + j)].is_zero())
        out.at(m) += cur[static_cast<size_t>(m + j)].scaled(inv_fact);
  }
  return out;
}

ModeOperator r_hat_operator(const GiventalData& d, const Window& w) {
  ModeOperator op;
  for (size_t idx = 0; idx < d.r_jets.size(); ++idx) {
    int k = static_cast<int>(idx) + 1;
    const RatMatrix& r = d.r_jets[idx];
    for (int a = 1; a <= d.N; ++a) {
      for (int b = 1; b <= d.N; ++b) {
        const Rat& rab = r.at(a - 1, b - 1);
        if (rab == 0) continue;
        // (r_k)_a^b T^a_j d/dT^b_{k+j}
        for (int j = 0; k + j + 1 <= w.annihilator_mode_max() && j <= w.creator_cap; ++j) {
          Rat c = rab * Rat(double_fact(2L * j - 1)) / Rat(double_fact(2L * (k + j) + 1));
          op += ModeOperator::term(c, 0, {ModeIndex{a, -j}, ModeIndex{b, k + j + 1}});
        }
        // 1/2 (-1)^{j+1} (r_k)^{ab} d/dT^a_j d/dT^b_{k-j-1}
        for (int j = 0; j <= k - 1; ++j) {
          if (j + 1 > w.annihilator_mode_max() || k - j > w.annihilator_mode_max()) continue;
          Rat c = rab * Rat(j % 2 == 0 ? -1 : 1, 2);
          c /= Rat(double_fact(2L * j + 1) * double_fact(2L * (k - j) - 1));
          op += ModeOperator::term(c, 0, {ModeIndex{a, j + 1}, ModeIndex{b, k - j}});
        }
      }
    }
  }
  return op.windowed(w);
}

HbarSeries apply_R(const GiventalData& d, const HbarSeries& s) {
  if (!d.has_r()) return s;
  int lvl = 0;
  for (int m = 0; m <= s.order(); ++m) lvl = std::max(lvl, s.at(m).max_level());
  Window w{lvl, 1 << 20, lvl};
  ModeOperator rhat = r_hat_operator(d, w);
  HbarSeries out = s;
  for (int m = 0; m <= s.order(); ++m) {
    TPolynomial cur = s.at(m);
    Rat inv_fact = 1;
    for (int n = 1; !cur.is_zero(); ++n) {
      cur = rhat.apply_poly(cur);
      inv_fact /= n;
      out.at(m) += cur.scaled(inv_fact);
    }
  }
  return out;
}

HbarSeries direct_ancestor_potential(const GiventalData& d, int extra_inner) {
  ValidationReport rep = validate(d);
  if (!rep.ok())
    throw std::invalid_argument("direct_ancestor_potential: invalid data\n" + rep.to_string());
  int inner = d.inner_order() + extra_inner;
  std::vector<HbarSeries> tau;
  tau.reserve(static_cast<size_t>(d.N));
  for (int a = 1; a <= d.N; ++a)
    tau.push_back(tau_alpha_sector(a, d.sectors[static_cast<size_t>(a) - 1].alpha, inner));
  HbarSeries z = apply_Delta_product(d, tau);
  z = apply_T(d, z, d.order_K, TranslationScaling::raw);
  return apply_R(d, z);
}

}  // namespace caj
