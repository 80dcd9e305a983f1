// Transcendental kernels over double-double values.
#include "indpoly/dd.hpp"

#include <cstdlib>

namespace indpoly {

// exp(x) via binary argument reduction x = k ln2 + r, |r| <= ln2/2, then the
// Taylor series of e^r.  |r|^27/27! < 1e-40, below double-double resolution.
DD dd_exp(DD x) {
  if (x.hi > 709.0) return DD{HUGE_VAL, 0.0};
  if (x.hi < -745.0) return DD{0.0, 0.0};
  double k = std::nearbyint(x.hi / dd_ln2.hi);
  DD r = x - DD(k) * dd_ln2;
  DD term{1.0};
  DD sum{1.0};
  for (int j = 1; j <= 27; ++j) {
    term = term * r / DD(static_cast<double>(j));
    sum += term;
  }
  return dd_ldexp(sum, static_cast<int>(k));
}

// log via Newton iteration on exp: y <- y + x e^{-y} - 1, quadratically
// convergent from the double-precision seed.
DD dd_log(DD x) {
  DD y{std::log(x.hi)};
  for (int it = 0; it < 2; ++it) {
    y = y + x * dd_exp(-y) - DD(1.0);
  }
  return y;
}

DD dd_sqrt(DD x) {
  if (x.hi == 0.0) return DD{0.0, 0.0};
  DD y{std::sqrt(x.hi)};
  y = (y + x / y) * DD(0.5);
  y = (y + x / y) * DD(0.5);
  return y;
}

namespace {

// Stirling series for log Gamma, valid for z >= 40: truncation after the
// B_20 term is ~3e-35 relative there.  Coefficients are B_{2k}/(2k(2k-1))
// formed exactly from integer ratios.
DD stirling_lgamma(DD z) {
  static const struct { double num, den; } bern[] = {
      {1.0, 6.0},        {-1.0, 30.0},      {1.0, 42.0},     {-1.0, 30.0},
      {5.0, 66.0},       {-691.0, 2730.0},  {7.0, 6.0},      {-3617.0, 510.0},
      {43867.0, 798.0},  {-174611.0, 330.0}};
  static const DD half_log_two_pi =
      (dd_ln2 + dd_log(DD(dd_pi))) * DD(0.5);
  DD lz = dd_log(z);
  DD sum = (z - DD(0.5)) * lz - z + half_log_two_pi;
  DD z2 = z * z;
  DD zpow = z;  // z^(2k-1)
  for (int k = 1; k <= 10; ++k) {
    DD coeff = DD(bern[k - 1].num) /
               DD(bern[k - 1].den * (2.0 * k) * (2.0 * k - 1.0));
    sum += coeff / zpow;
    zpow = zpow * z2;
  }
  return sum;
}

}  // namespace

DD dd_lgamma(DD z) {
  // Shift into the Stirling region: lgamma(z) = lgamma(z+m) - sum log(z+j).
  DD shift{0.0};
  DD zz = z;
  while (zz.hi < 40.0) {
    shift += dd_log(zz);
    zz += DD(1.0);
  }
  return stirling_lgamma(zz) - shift;
}

}  // namespace indpoly
