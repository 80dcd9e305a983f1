// Self-contained special-function kernel: Airy Ai/Bi (+derivatives) and their
// zeros, Bessel J/Y at the six fractional orders used by the asymptotic
// formulas, log-gamma, incomplete beta, elliptic F (including imaginary
// modulus m = -1), Carlson R_F, and two fixed Gauss 2F1 specializations.
#pragma once

#include <stdexcept>

namespace indpoly {

// Module constants: regime switchovers and iteration budgets.
namespace specfun_tuning {
inline constexpr double kAirySeriesMax = 8.0;    // |x| <= this: Maclaurin in dd
inline constexpr double kBesselSeriesMax = 12.0; // x <= max(this, 2*order)
inline constexpr double kCarlsonErrtol = 0.0025;
inline constexpr int kMaxSeriesTerms = 400;
}  // namespace specfun_tuning

enum class AiryKind { Ai, AiPrime, Bi, BiPrime };

struct SpecialValue {
  double value = 0.0;
  double abs_error_bound = 0.0;
};

SpecialValue airy(AiryKind kind, double x);

// k-th zero of Ai in descending order (k = 1 is the largest, ~ -2.338).
double airy_zero(int k);  // 1 <= k <= 50

// Orders restricted to the set appearing in the Bessel-type theorems.
struct BesselOrder {
  int num;
  int den;
  BesselOrder(int num_, int den_);
  double value() const { return static_cast<double>(num) / den; }
};

enum class BesselKind { J, Y };

SpecialValue bessel(BesselKind kind, BesselOrder order, double x);  // x > 0

// F(phi, m) = int_0^phi dtheta / sqrt(1 - m sin^2 theta), phi in [0, pi/2],
// m <= 1 (the asymptotic formulas use m = -1).
double elliptic_f(double phi, double m);

// Carlson symmetric elliptic integral of the first kind.
double carlson_rf(double x, double y, double z);

// Non-regularized incomplete beta B_x(a, b) = int_0^x y^{a-1}(1-y)^{b-1} dy.
double incomplete_beta(double x, double a, double b);

// Gauss 2F1 at the two parameter triples used by the phase-map remarks:
// CF: (1/6, 1/2; 7/6), BV: (1/4, 1/2; 5/4); argument t <= 0.
enum class Hyp2F1Which { CF, BV };
double hyp2f1_special(Hyp2F1Which which, double t);

double log_gamma(double x);  // x > 0

}  // namespace indpoly
