// Leading-order asymptotic approximants (s = 0 coefficients) for all four
// regimes and all four families, returned as ScaledReal values comparable
// against recurrence truth.
#pragma once

#include <optional>
#include <string>

#include "indpoly/families.hpp"
#include "indpoly/phase.hpp"
#include "indpoly/scaled.hpp"

namespace indpoly {

// Module constants: quadrature target and default window extents.
namespace asympt_tuning {
inline constexpr double kQuadRelTol = 1e-12;     // exponent integrals
inline constexpr double kOscDeltaDefault = 0.15; // oscillatory margin (rad)
inline constexpr double kEdgeSMaxDefault = 3.0;  // |s| cap at the edge
}  // namespace asympt_tuning

// Recurrence-rate expansion of a birth-death family:
//   lambda_n = b (n^p + u n^{p-1}) + O(n^{p-2}),
//   mu_n     = b (n^p + v n^{p-1}) + O(n^{p-2}).
struct RateExpansion {
  double b;
  double u;
  double v;
  int p;
  double sigma;  // the rescaling shift: x = (n + sigma)^p t
};

RateExpansion rate_expansion(const FamilySpec& family);  // birth-death only

// Monic-coefficient expansion feeding the general exponential-region lemma:
//   a_n = a n^p + alpha n^{p-1} + O(n^{p-2}),
//   b_n = b^2 n^{2p} + beta n^{2p-1} + O(n^{2p-2}).
struct OuterParams {
  double a;
  double alpha;
  double b;
  double beta;
  int p;
  double sigma;
};

// The birth-death substitution a = 2b, alpha = b(u+v), beta = b^2(u+v-p).
OuterParams outer_params_from_rates(const RateExpansion& rates);

// One evaluated approximant.  `value` approximates, depending on the
// operation: the monic polynomial (outer operations), the native polynomial
// (oscillatory / Airy / Bessel), a weighted native polynomial (edge), or a
// weighted orthonormal polynomial (orthonormal edge); see each operation.
struct ApproximantResult {
  ScaledReal value;
  Region regime = Region::OuterExponential;
  std::optional<FamilySpec> family;  // absent for the family-free lemma
  int n = 0;
  double t_or_y_or_s = 0.0;  // rescaled abscissa in the formula's own units
  std::string formula_id;
};

// Exponential region, general monic recurrence: approximates
// pi_n((n + sigma)^p y) for y outside the interval I spanned by
// {0, a - 2b, a + 2b}.  The five exponential factors are evaluated with the
// four r/s-integrals done by adaptive quadrature.
ApproximantResult approx_outer_general(const OuterParams& params, double y,
                                       int n);

// Exponential region, birth-death families: the closed form obtained from the
// general lemma under the rate substitution; approximates the monic
// pi_n((n + sigma)^p t) for t > t_+ or t < 0.
ApproximantResult approx_outer_birth_death(const FamilySpec& family, double t,
                                           int n);

// The p_n-normalized variant of the outer approximant, i.e. the per-family
// proposition obtained from the monic form via the normalization constant and
// Stirling factors.  Same domain as approx_outer_birth_death.
ApproximantResult approx_outer_standard(const FamilySpec& family, double t,
                                        int n);

// Exponential region for the quartic-weight family: approximates the native
// polynomial at x = 8 (n + 1/2)^2 y for |y| > 1 (negative y by parity).
ApproximantResult approx_outer_chen_ismail(double y, int n);

// Oscillatory region: approximates the native polynomial at the family's
// rescaled abscissa.  The window keeps theta in [delta, pi/2 - delta], where
// t = 8 cos(theta) (quartic-weight family) or t = t_+ cos^2(theta).
ApproximantResult approx_oscillatory(
    const FamilySpec& family, double t, int n,
    double delta = asympt_tuning::kOscDeltaDefault);

// Airy-type uniform approximant anchored at the upper transition point:
// approximates the native polynomial for t > 0.
ApproximantResult approx_airy(const FamilySpec& family, double t, int n);

// Bessel-type uniform approximant anchored at the lower transition point
// (birth-death families only): approximates the native polynomial for
// 0 < t <= M.  M = 0 selects the default cap t_+ / 2.
ApproximantResult approx_bessel(const FamilySpec& family, double t, int n,
                                double M = 0.0);

// Airy edge approximant: approximates edge_weight(x) * native(x) at
// x = edge_abscissa(s), |s| <= s_max.
ApproximantResult approx_edge(const FamilySpec& family, double s, int n,
                              double s_max = asympt_tuning::kEdgeSMaxDefault);

// Orthonormal edge approximant: approximates edge_weight(x) * phat_n(x).
ApproximantResult orthonormal_edge(
    const FamilySpec& family, double s, int n,
    double s_max = asympt_tuning::kEdgeSMaxDefault);

// x(s) = t_+ nu^theta + (edge scale) * s * nu^{theta - 2/3}, per family.
double edge_abscissa(const FamilySpec& family, double s, int n);

// The multiplier applied to the native polynomial on the left-hand side of
// the edge formulas: w(x)^{1/2} for the quartic-weight family, and the
// x-power times decaying-exponential factor for the birth-death families.
ScaledReal edge_weight(const FamilySpec& family, double x);

// Exponent of nu in the orthonormal edge formula (-5/6, -11/6, -4/3, -4/3).
double orthonormal_edge_nu_exponent(const FamilySpec& family);

}  // namespace indpoly
