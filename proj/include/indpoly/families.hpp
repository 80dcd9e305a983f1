// The four polynomial families: rates, normalizations, and recurrence-based
// evaluation in scaled floating-point arithmetic.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "indpoly/scaled.hpp"

namespace indpoly {

enum class FamilyKind { ChenIsmail, BergValent, ConradFlajoletI, ConradFlajoletII };

// Which of the four families, plus the parameter c for the Conrad-Flajolet
// kinds (dimensionless, c > 0; unused otherwise).
struct FamilySpec {
  FamilyKind kind = FamilyKind::ChenIsmail;
  double c = 0.0;

  static FamilySpec chen_ismail();
  static FamilySpec berg_valent();
  static FamilySpec conrad_flajolet_1(double c);
  static FamilySpec conrad_flajolet_2(double c);
  static FamilySpec from_name(const std::string& name, double c);

  bool is_birth_death() const { return kind != FamilyKind::ChenIsmail; }
  bool has_c() const {
    return kind == FamilyKind::ConradFlajoletI ||
           kind == FamilyKind::ConradFlajoletII;
  }
  std::string name() const;
};

// Constants of the normalized three-term form
//   p_{n+1}(x) - (A_n x + B_n) p_n(x) + p_{n-1}(x) = 0,
// where A_n ~ alpha0 n^{-theta} (1 + (alpha1/alpha0)/n + ...) and
// B_n ~ beta0 + beta1/n + beta2/n^2 (identically 0 for ChenIsmail, which the
// table records as beta0 = beta1 = beta2 = 0).
struct StandardFormData {
  int theta = 0;
  double alpha0 = 0.0, alpha1 = 0.0;
  double beta0 = 0.0, beta1 = 0.0, beta2 = 0.0;
  double tau0 = 0.0;
  double t_plus = 0.0, t_minus = 0.0;

  // Shifted degree variable nu = n + tau0 (> 0 for n >= 0).
  double nu(long long n) const { return static_cast<double>(n) + tau0; }
};

StandardFormData standard_form(const FamilySpec& family);

// Birth and death rates. ChenIsmail is not a birth-death family and is
// rejected here; its recurrence is exposed through monic_coeffs instead.
double birth_rate(const FamilySpec& family, long long n);
double death_rate(const FamilySpec& family, long long n);

// Monic coefficients: pi_{n+1} = (x - alpha_n) pi_n - beta_n pi_{n-1},
// alpha_n = lambda_n + mu_n and beta_n = lambda_{n-1} mu_n for birth-death
// families; alpha_n = 0, beta_n = 4n^2(4n^2-1) for ChenIsmail. beta requires
// n >= 1; alpha alone is available for n = 0 via monic_alpha.
double monic_alpha(const FamilySpec& family, long long n);
std::pair<double, double> monic_coeffs(const FamilySpec& family, long long n);

// Normalization constant K_n, evaluated from log-gamma in double-double
// arithmetic (relative error well below 1e-12).
ScaledReal normalization_K(const FamilySpec& family, long long n);

// Coefficients of the normalized recurrence: A_n = K_n / (lambda_n K_{n+1})
// for birth-death families (A_n = K_n / K_{n+1} for ChenIsmail) and
// B_n = -(lambda_n + mu_n) A_n (0 for ChenIsmail).
std::pair<double, double> standard_coeffs(const FamilySpec& family, long long n);

// Forward-recurrence trace in scaled arithmetic. `p` is the standard form
// seeded with p_0 = 1 (so p_k = K_0 times the unit-normalized solution);
// `pi` is monic; `phat` is orthonormal. All three run their own recurrences.
struct RecurrenceTrace {
  FamilySpec family;
  double x = 0.0;
  std::vector<ScaledReal> p;
  std::vector<ScaledReal> pi;
  std::vector<ScaledReal> phat;
};

RecurrenceTrace evaluate_standard(const FamilySpec& family, int n, double x);

// The family's own normalization of the polynomial: Q_n(x) for the three
// birth-death families (Q_n = (-1)^n K_n/K_0 * p_n), F_n(x) for ChenIsmail
// (F_n = K_n/K_0 * p_n = pi_n).
ScaledReal native_value(const FamilySpec& family, int n, double x);

// Orthonormal polynomial at a complex point, as (re, im) in scaled form:
// Phat_n(z) = pi_n(z) / sqrt(prod_{k=1}^n beta_k).
struct ScaledComplex {
  ScaledReal re, im;
};
ScaledComplex evaluate_orthonormal(const FamilySpec& family, int n,
                                   double z_re, double z_im);

}  // namespace indpoly
