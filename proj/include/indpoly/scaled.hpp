// ScaledReal: sign / significand / binary-exponent triple able to represent
// magnitudes like (2n/e)^{2n} far outside double range.  The significand is
// kept normalized in [1,2) (or exactly 0) after every operation.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "indpoly/dd.hpp"

namespace indpoly {

struct ScaledReal {
  int sign = 0;               // -1, 0, +1
  double significand = 0.0;   // in [1,2) when sign != 0, else exactly 0
  long long exponent2 = 0;    // value = sign * significand * 2^exponent2

  ScaledReal() = default;

  static ScaledReal from_double(double v) {
    if (v == 0.0) return {};
    int e = 0;
    double m = std::frexp(std::abs(v), &e);  // m in [0.5, 1)
    ScaledReal r;
    r.sign = v < 0.0 ? -1 : 1;
    r.significand = 2.0 * m;
    r.exponent2 = e - 1;
    return r;
  }

  // Value with natural log of magnitude `ln_abs` and the given sign.
  // The double-double overload keeps full relative accuracy even when
  // |ln_abs| is in the tens of thousands (where a double log alone would
  // already cost ~1e-12 of relative error in the value).
  static ScaledReal from_log_dd(DD ln_abs, int sign) {
    if (sign == 0) return {};
    double k = std::floor(ln_abs.hi / dd_ln2.hi);
    DD r = ln_abs - DD(k) * dd_ln2;
    double sig = dd_exp(r).to_double();  // in [1, 2) up to rounding
    ScaledReal out = from_double(sig);
    out.sign *= sign;
    out.exponent2 += static_cast<long long>(k);
    return out;
  }

  static ScaledReal from_log(double ln_abs, int sign) {
    return from_log_dd(DD(ln_abs), sign);
  }

  bool is_zero() const { return sign == 0; }

  // May overflow/underflow to +-inf / 0 if the exponent exceeds double range.
  double to_double() const {
    if (sign == 0) return 0.0;
    if (exponent2 > 1100) {
      return sign > 0 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
    }
    if (exponent2 < -1100) return 0.0;
    return sign * std::ldexp(significand, static_cast<int>(exponent2));
  }

  double ln_abs() const {
    return std::log(significand) + static_cast<double>(exponent2) * dd_ln2.hi;
  }
  double log10_abs() const {
    static const double log10_2 = std::log10(2.0);
    return std::log10(significand) + static_cast<double>(exponent2) * log10_2;
  }
  double log2_abs() const {
    return std::log2(significand) + static_cast<double>(exponent2);
  }

  friend ScaledReal operator-(ScaledReal a) {
    a.sign = -a.sign;
    return a;
  }

  friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
    if (a.sign == 0 || b.sign == 0) return {};
    ScaledReal r = from_double(a.significand * b.significand);
    r.sign *= a.sign * b.sign;
    r.exponent2 += a.exponent2 + b.exponent2;
    return r;
  }

  friend ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
    if (a.sign == 0) return {};
    ScaledReal r = from_double(a.significand / b.significand);
    r.sign *= a.sign * b.sign;
    r.exponent2 += a.exponent2 - b.exponent2;
    return r;
  }

  friend ScaledReal operator*(const ScaledReal& a, double s) {
    return a * from_double(s);
  }
  friend ScaledReal operator*(double s, const ScaledReal& a) {
    return a * from_double(s);
  }
  friend ScaledReal operator/(const ScaledReal& a, double s) {
    return a / from_double(s);
  }

  friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const ScaledReal& big = (a.exponent2 >= b.exponent2) ? a : b;
    const ScaledReal& small = (a.exponent2 >= b.exponent2) ? b : a;
    long long d = big.exponent2 - small.exponent2;
    if (d > 1060) return big;
    double bs = big.sign * big.significand;
    double ss = small.sign * std::ldexp(small.significand, -static_cast<int>(d));
    ScaledReal r = from_double(bs + ss);
    r.exponent2 += big.exponent2;
    return r;
  }

  friend ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) {
    return a + (-b);
  }

  // Compare |a| vs |b|: -1, 0, +1.
  static int cmp_abs(const ScaledReal& a, const ScaledReal& b) {
    if (a.sign == 0 && b.sign == 0) return 0;
    if (a.sign == 0) return -1;
    if (b.sign == 0) return 1;
    if (a.exponent2 != b.exponent2) return a.exponent2 < b.exponent2 ? -1 : 1;
    if (a.significand < b.significand) return -1;
    if (a.significand > b.significand) return 1;
    return 0;
  }
};

// a/b as a plain double (requires the exponent gap to fit; callers use this
// for approximant/recurrence ratios which are O(1)).
inline double ratio_to_double(const ScaledReal& a, const ScaledReal& b) {
  return (a / b).to_double();
}

}  // namespace indpoly
