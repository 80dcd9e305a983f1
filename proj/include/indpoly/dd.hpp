// Double-double arithmetic: ~31 significant digits carried as an unevaluated
// sum of two doubles.  Used by series kernels (Airy Maclaurin, Stirling
// log-gamma) where plain double cancellation would breach accuracy contracts.
#pragma once

#include <cmath>

namespace indpoly {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h) {}
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

namespace dd_detail {

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return DD{s, (a - (s - bb)) + (b - bb)};
}

// Requires |a| >= |b| (or a == 0).
inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return DD{s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return DD{p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline DD operator+(DD a, DD b) {
  DD s = dd_detail::two_sum(a.hi, b.hi);
  DD t = dd_detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = dd_detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return dd_detail::quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return DD{-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
  DD p = dd_detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = a - b * DD(q1);
  double q2 = r.hi / b.hi;
  r = r - b * DD(q2);
  double q3 = r.hi / b.hi;
  DD q = dd_detail::quick_two_sum(q1, q2);
  return q + DD(q3);
}

inline DD& operator+=(DD& a, DD b) { a = a + b; return a; }
inline DD& operator-=(DD& a, DD b) { a = a - b; return a; }
inline DD& operator*=(DD& a, DD b) { a = a * b; return a; }
inline DD& operator/=(DD& a, DD b) { a = a / b; return a; }

inline bool operator<(DD a, DD b) { DD d = a - b; return d.hi < 0.0; }
inline bool operator>(DD a, DD b) { return b < a; }

inline DD dd_abs(DD a) { return a.hi < 0.0 ? -a : a; }
inline DD dd_ldexp(DD a, int k) {
  return DD{std::ldexp(a.hi, k), std::ldexp(a.lo, k)};
}

// Round-to-nearest double-double representations.
inline constexpr DD dd_pi{3.141592653589793116e+00, 1.2246467991473531772e-16};
inline constexpr DD dd_two_pi{6.283185307179586232e+00, 2.4492935982947063545e-16};
inline constexpr DD dd_ln2{6.9314718055994530942e-01, 2.3190468138462995584e-17};

DD dd_exp(DD x);
DD dd_log(DD x);   // x > 0
DD dd_sqrt(DD x);  // x >= 0
DD dd_lgamma(DD z);  // z > 0

}  // namespace indpoly
