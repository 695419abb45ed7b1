#pragma once

#include "caj/modeops.hpp"

#include <map>
#include <string>
#include <vector>

namespace caj {

struct SectorData {
  int alpha = 1;                // 1 regular (Airy-type), 0 irregular (Bessel-type)
  Rat sqrt_delta = 1;           // chosen square root of Delta_a, nonzero
  std::map<int, Rat> delta_T;   // translation table, support k >= 1+alpha
};

// Full input record for one generalized ancestor potential.
struct GiventalData {
  int N = 1;
  std::vector<SectorData> sectors;
  std::vector<RatMatrix> r_jets;  // r_1..r_M; jets beyond M are zero by definition
  int order_K = 0;

  bool any_alpha_one() const;
  bool has_translations() const;
  bool has_r() const;
  // Extra hbar orders the translation operator can pull down when acting on
  // the rescaled tau product truncated for output order K.
  int translation_jmax(int K) const;
  int inner_order() const { return order_K + translation_jmax(order_K); }
};

struct ValidationIssue {
  std::string location;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

// Checks the symplectic adjointness of each r_k (self-adjoint for odd k,
// skew for even k), nonzero sqrt_delta, and the delta_T support rule.
ValidationReport validate(const GiventalData& d);

struct LocalCurveSector {
  bool regular = true;
  std::map<int, Rat> y;  // y_k coefficients, k >= 2*alpha-1, odd k drive the dictionary
};

struct LocalCurveData {
  std::vector<LocalCurveSector> sectors;
};

// Coefficient dictionary: sqrt_delta = 1/y_{2a-1}, DT_k = -(2k-1)!! y_{2k-1}/y_{2a-1}
// for k >= 1+alpha; r_jets left empty.
GiventalData from_local_curve(const LocalCurveData& c, int order_K);

// JSON round-trip used by the CLI config format; unknown fields are rejected.
GiventalData givental_from_json_text(const std::string& text);
std::string givental_to_json_text(const GiventalData& d);

// Per-sector hbar^m coefficients scaled by sqrt_delta^m, then the product over
// sectors (sector variables are disjoint).
HbarSeries apply_Delta_product(const GiventalData& d, const std::vector<HbarSeries>& tau);

enum class TranslationScaling { raw, sqrt_delta };

// exp(hbar^-1 sum DT_k^a d/dT_k^a) s, truncated at out_order; translations
// optionally carry the sqrt_delta factor. Throws when s.order() cannot
// certify exactness at out_order.
HbarSeries apply_T(const GiventalData& d, const HbarSeries& s, int out_order,
                   TranslationScaling scaling);

// Quantized r(z) as a mode operator, truncated to the window.
ModeOperator r_hat_operator(const GiventalData& d, const Window& w);

// exp(r_hat) s, exact (the exponential terminates order by order).
HbarSeries apply_R(const GiventalData& d, const HbarSeries& s);

// Solver A: R T Delta applied to the per-sector tau product, computed at the
// certified inner order (plus any extra margin) and truncated to d.order_K.
HbarSeries direct_ancestor_potential(const GiventalData& d, int extra_inner = 0);

}  // namespace caj
