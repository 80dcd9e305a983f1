// Indeterminate-moment-problem diagnostics: the explicit weight family of the
// quartic-growth (Chen-Ismail) recurrence, convergence of sum |Phat_n(z)|^2
// at non-real z, and the transition-exponent pattern k = 1/6 - 1/(2m).
#pragma once

#include <complex>
#include <vector>

#include "indpoly/families.hpp"

namespace indpoly {

// One evaluation of the Chen-Ismail weight w_alpha(x).
struct WeightSample {
  double x = 0.0;
  double alpha = 0.0;
  double w = 0.0;  // strictly positive; underflows to 0 only for |x| > ~1.6e5
};

// w_alpha(x) = sqrt(1-a^2) (cos y + cosh y) /
//              (2 [(cos y + cosh y)^2 - a^2 (sin y sinh y)^2]),
// where y = rho sqrt(x/2) and rho = 2 sqrt(pi) Gamma(5/4) / Gamma(3/4).
// Both cos y + cosh y and (sin y sinh y)^2 are even power series in x with
// real coefficients, so the weight is real and even on the whole line and is
// evaluated at |x|.  Requires |alpha| < 1.
WeightSample chen_ismail_weight(double x, double alpha);

// Partial sums of sum_{n>=1} |Phat_n(z)|^2 at a non-real point, with the
// fitted decay exponent of the terms.  Bounded partial sums at one non-real z
// are the classical certificate that the moment problem is indeterminate;
// the report is a numerical diagnostic, never a proof.
struct IndeterminacyReport {
  FamilySpec family;
  std::complex<double> z;
  std::vector<double> partial_sums;  // partial_sums[k] = S_k for k = 0..N
  double fitted_decay_slope = 0.0;   // LSQ slope of log |Phat_n(z)|^2 vs log n
};

// Runs the orthonormal recurrence once up to degree N (8 <= N <= 5000),
// accumulating S_k = sum_{n=1}^{k} |Phat_n(z)|^2.  The decay slope is fitted
// over n in [N/4, N].  Requires Im z != 0.
IndeterminacyReport indeterminacy_series(const FamilySpec& family,
                                         std::complex<double> z, int N);

// k = 1/6 - 1/(2m) for m > 0: the conjectured nu-exponent of the weighted
// orthonormal polynomial at the upper transition point when the weight obeys
// -log w(x) = O(x^m).  (m = 2 reproduces the Hermite value -1/12.)
double conjecture_exponent(double m);

// Consistency report for the exponent pattern on one family.
struct ConjectureCheck {
  double m = 0.0;           // tail-growth exponent of -log w; equals 1/theta
  double k_formula = 0.0;   // conjecture_exponent(m)
  double k_observed = 0.0;  // fitted nu-exponent of the orthonormal edge value
  bool consistent = false;  // |k_observed - k_formula| <= 0.05
};

// Fits log |orthonormal_edge(family, 0, n)| against log nu over
// n in {25, 50, 100, 200} and compares the slope with 1/6 - 1/(2m).
ConjectureCheck conjecture_check(const FamilySpec& family);

// Large-x envelope of the weight function.  For the Chen-Ismail family the
// weights are known and the envelope is exact (conjectured = false); the
// measures of the three birth-death families are unknown, and their envelope
// is the one inferred from the edge asymptotics (conjectured = true).
struct TailEnvelope {
  double value = 0.0;
  bool conjectured = true;
};

// Evaluates the envelope at x > 0: exp(-rho sqrt(x/2)) modulation for
// ChenIsmail (exactly w_0(x)), x^{-1/2} exp(-c x^{1/4}) for BergValent, and
// x^{(2c-1)/3} resp. x^{2(c-1)/3} times exp(-c' x^{1/3}) for the two
// Conrad-Flajolet kinds.
TailEnvelope weight_tail_envelope(const FamilySpec& family, double x);

}  // namespace indpoly
