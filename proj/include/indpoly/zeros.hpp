#pragma once

#include <vector>

#include "indpoly/families.hpp"

namespace indpoly {

// Symmetric tridiagonal (Jacobi) matrix whose eigenvalues are the zeros of
// the degree-n polynomial: diagonal alpha_0..alpha_{n-1}, off-diagonal
// sqrt(beta_1)..sqrt(beta_{n-1}) from the monic recurrence coefficients.
struct JacobiMatrix {
  int n = 0;
  std::vector<double> diag;     // alpha_0 .. alpha_{n-1}
  std::vector<double> offdiag;  // sqrt(beta_1) .. sqrt(beta_{n-1})
};

// Zeros in descending order x_{n,1} > ... > x_{n,n}, each certified by a
// Sturm sign-count bracket of width at most enclosure_width.
struct ZeroSet {
  std::vector<double> zeros;
  double enclosure_width = 0.0;
};

// Two-sided bound on the zero locations from the chain-sequence method with
// c_k = 1/4: every zero lies in (A, B) where B = max x_k and A = min y_k
// over 1 <= k <= n, and x_k, y_k are the roots of
// (x - alpha_k)(x - alpha_{k-1}) / 4 = beta_k.
struct ChainBound {
  double A = 0.0;
  double B = 0.0;
  std::vector<double> roots_x;  // x_1 .. x_n (upper roots)
  std::vector<double> roots_y;  // y_1 .. y_n (lower roots)
};

// Builds the n-by-n Jacobi matrix of a family. n >= 1.
JacobiMatrix build_jacobi(const FamilySpec& family, int n);

// Number of eigenvalues of the matrix strictly below mu, by the classical
// Sturm (LDL^T pivot sign) count.
int sturm_count(const JacobiMatrix& matrix, double mu);

// All n zeros by Sturm-count bisection, refined to absolute bracket width
// tol * (Gershgorin scale of the matrix). n <= 2000, tol > 0.
ZeroSet compute_zeros(const FamilySpec& family, int n, double tol);

// Chain-sequence bound with c_k = 1/4 for the degree-n polynomial. n >= 1.
ChainBound chain_bound(const FamilySpec& family, int n);

// Closed-form upper bound on the largest zero:
//   ChenIsmail       8 n^2 sqrt(1 - 1/(4 n^2))   (equals chain_bound(...).B)
//   BergValent       2^10 n^4 - 2^10 n^3 + 35 * 2^6 n^2  (dominates B)
//   ConradFlajolet   108 n^3 + 108 c n^2   (bounds the zeros; the chain
//                    value B exceeds this form for n <= 3)
double closed_form_bound(const FamilySpec& family, int n);

// Two-term prediction of the k-th largest zero from the k-th Airy zero:
// x_{n,k} ~ t_plus nu^theta + scale * a_k * nu^(theta - 2/3). 1 <= k <= 10.
double predict_extreme_zero(const FamilySpec& family, int n, int k);

// True iff the recurrence-evaluated polynomial changes sign on
// [prediction - radius, prediction + radius]; a sign change certifies a zero
// inside the interval. radius <= 0 returns false.
bool hethcote_verify(const FamilySpec& family, int n, int k, double radius);

// Cumulative distribution function of the limiting zero measure for the
// rescaled polynomial, evaluated by quadrature (absolute accuracy ~1e-8).
// Support: [-1, 1] for ChenIsmail, [0, 1] otherwise; densities
//   ChenIsmail       (1/pi) int_{sqrt|x|}^1 ds / sqrt(s^4 - x^2)
//   BergValent       (1/pi) int_{x^{1/4}}^1 ds / sqrt(x (s^4 - x))
//   ConradFlajolet   (1/pi) int_{x^{1/3}}^1 ds / sqrt(x (s^3 - x))
double limiting_cdf(const FamilySpec& family, double x);

// Kolmogorov-Smirnov distance between the empirical distribution of the
// zeros rescaled by t_plus * nu^theta and limiting_cdf, with the empirical
// CDF taken at jump midpoints (half-counting). n <= 500.
double ks_distance(const FamilySpec& family, int n);

}  // namespace indpoly
