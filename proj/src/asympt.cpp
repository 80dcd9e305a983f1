// Leading-order asymptotic approximants in all four regimes: the general
// exponential-region formula, its birth-death closed forms, the oscillatory
// cosine formulas, and the uniform Airy/Bessel approximants with their edge
// corollaries.
#include "indpoly/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "indpoly/dd.hpp"
#include "indpoly/quad.hpp"
#include "indpoly/specfun.hpp"

namespace indpoly {
namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

// ln |v| in double-double; the exponent contribution is exact.
DD scaled_ln(const ScaledReal& v) {
  return DD(static_cast<double>(v.exponent2)) * dd_ln2 +
         DD(std::log(v.significand));
}

DD dd_log3() { return dd_log(DD(3.0)); }

// Coefficient of nu sqrt(t) in the quartic-weight family's growth factor:
// gamma(5/4)/gamma(3/4) sqrt(pi/2).
const DD& exp_rate_ci() {
  static const DD v = dd_exp(dd_lgamma(DD(1.25)) - dd_lgamma(DD(0.75))) *
                      dd_sqrt(dd_ldexp(dd_pi, -1));
  return v;
}

// Coefficient of nu t^{1/4}: sqrt(pi) gamma(1/4) / (2^{5/2} gamma(3/4)).
const DD& exp_rate_bv() {
  static const DD v = dd_sqrt(dd_pi) *
                      dd_exp(dd_lgamma(DD(0.25)) - dd_lgamma(DD(0.75))) /
                      (DD(4.0) * dd_sqrt(DD(2.0)));
  return v;
}

// Coefficient of nu t^{1/3}: sqrt(pi) gamma(1/3) / (3 cbrt(4) gamma(5/6)).
const DD& exp_rate_cf() {
  static const DD v =
      dd_sqrt(dd_pi) *
      dd_exp(dd_lgamma(DD(1.0) / DD(3.0)) - dd_lgamma(DD(5.0) / DD(6.0))) /
      (DD(3.0) * dd_exp((DD(2.0) / DD(3.0)) * dd_ln2));
  return v;
}

// Coefficient of nu t^{1/3} inside the lower-region trigonometric phase,
// sqrt(3) times the exponential rate.
const DD& trig_rate_cf() {
  static const DD v = exp_rate_cf() * dd_sqrt(DD(3.0));
  return v;
}

// 2 sqrt(pi) gamma(5/4)/gamma(3/4), the rate in the quartic-family weight.
const DD& weight_rate_ci() {
  static const DD v =
      DD(2.0) * dd_sqrt(dd_pi) * dd_exp(dd_lgamma(DD(1.25)) - dd_lgamma(DD(0.75)));
  return v;
}

// ln of the recurring cubic-family constant: 3^{c+1} G_1 G_2^2 for the first
// kind, 3^{c+1/2} G_1^2 G_2 for the second, with G_i = gamma((c+i)/3).
DD cf_gamma_ln(const FamilySpec& f) {
  const DD g1 = dd_lgamma(DD((f.c + 1.0) / 3.0));
  const DD g2 = dd_lgamma(DD((f.c + 2.0) / 3.0));
  if (f.kind == FamilyKind::ConradFlajoletI)
    return DD(f.c + 1.0) * dd_log3() + g1 + DD(2.0) * g2;
  return DD(f.c + 0.5) * dd_log3() + DD(2.0) * g1 + g2;
}

// Ai(z) in scaled form.  Once the argument leaves the comfortable double
// range the exponential asymptotic series takes over in the log domain; its
// terms drop below 1e-18 long before the divergent tail for z >= 18.
ScaledReal airy_ai_scaled(double z) {
  if (z <= 18.0) return ScaledReal::from_double(airy(AiryKind::Ai, z).value);
  const double zeta = (2.0 / 3.0) * z * std::sqrt(z);
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 60; ++k) {
    term *= -(3 * k + 2.5) * (3 * k + 1.5) * (3 * k + 0.5) /
            (54.0 * (k + 1) * (k + 0.5) * zeta);
    sum += term;
    if (std::fabs(term) < 1e-18 * sum) break;
  }
  const double ln_ai = -zeta - std::log(2.0 * std::sqrt(kPi)) -
                       0.25 * std::log(z) + std::log(sum);
  return ScaledReal::from_log(ln_ai, +1);
}

// Integral over [0, 1] under the substitution r = 1 - u^2, which flattens
// inverse-square-root growth of the integrand near r = 1.
double integral01_flat(const std::function<double(double)>& f) {
  return integrate([&](double u) { return 2.0 * u * f(1.0 - u * u); }, 0.0,
                   1.0, asympt_tuning::kQuadRelTol);
}

// Sign of the approximant once the (-1)^n of a negative argument (or of the
// birth-death native normalization) is folded in.
int parity_sign(bool flip, int n) { return (flip && n % 2 == 1) ? -1 : +1; }

// Shared tail of every operation.
ApproximantResult make_result(ScaledReal value, Region regime,
                              std::optional<FamilySpec> family, int n,
                              double t_or_y_or_s, const char* formula_id) {
  ApproximantResult out;
  out.value = value;
  out.regime = regime;
  out.family = std::move(family);
  out.n = n;
  out.t_or_y_or_s = t_or_y_or_s;
  out.formula_id = formula_id;
  return out;
}

// int_0^1 ds / sqrt(1 - t_+ s^p / t), the exponent integral of the
// birth-death exponential-region forms; real on both admissible sides.
double outer_exponent_integral(double tp, double t, int p) {
  return integral01_flat([&](double s) {
    return 1.0 / std::sqrt(1.0 - tp * std::pow(s, p) / t);
  });
}

}  // namespace

RateExpansion rate_expansion(const FamilySpec& family) {
  require(family.is_birth_death(),
          "rate_expansion: requires a birth-death family");
  switch (family.kind) {
    case FamilyKind::BergValent:
      return {256.0, 2.0, 0.0, 4, 0.25};
    case FamilyKind::ConradFlajoletI:
      return {27.0, family.c + 5.0 / 3.0, family.c + 1.0 / 3.0, 3,
              (family.c + 1.0) / 3.0};
    default:
      return {27.0, family.c + 4.0 / 3.0, family.c - 1.0 / 3.0, 3,
              (2.0 * family.c + 1.0) / 6.0};
  }
}

OuterParams outer_params_from_rates(const RateExpansion& rates) {
  OuterParams out;
  out.a = 2.0 * rates.b;
  out.alpha = rates.b * (rates.u + rates.v);
  out.b = rates.b;
  out.beta = rates.b * rates.b *
             (rates.u + rates.v - static_cast<double>(rates.p));
  out.p = rates.p;
  out.sigma = rates.sigma;
  return out;
}

ApproximantResult approx_outer_general(const OuterParams& params, double y,
                                       int n) {
  require(n >= 1, "approx_outer_general: n must be >= 1");
  require(params.p >= 1, "approx_outer_general: p must be a positive integer");
  require(params.b > 0.0, "approx_outer_general: b must be positive");
  require(params.a >= 0.0, "approx_outer_general: a must be nonnegative");
  const double lo = std::min(0.0, params.a - 2.0 * params.b);
  const double hi = std::max(0.0, params.a + 2.0 * params.b);
  require(y < lo || y > hi,
          "approx_outer_general: y must lie outside the spectral interval");

  const double a = params.a, b = params.b;
  const double p = static_cast<double>(params.p);
  const double dn = static_cast<double>(n);
  // Outside the spectral interval D = (y - a r^p)^2 - 4 b^2 r^{2p} stays
  // positive, and the continuation to y < 0 flips the sign of sqrt(D) and of
  // the bracket (y - a r^p) + sqrt(D).  Writing m = |y - a r^p| makes every
  // integrand a single expression valid on both sides; the two odd pieces
  // carry an explicit sign(y), and the flipped bracket contributes the
  // overall (-1)^n.
  const double sgn_y = (y > 0.0) ? 1.0 : -1.0;
  auto root_lin = [&](double r) {
    const double d = y - a * r;
    return std::sqrt(d * d - 4.0 * b * b * r * r);
  };
  auto root_pow = [&](double r) {
    const double rq = std::pow(r, params.p);
    const double d = y - a * rq;
    return std::sqrt(d * d - 4.0 * b * b * rq * rq);
  };

  const double i2 = integrate(
      [&](double r) {
        const double rq = std::pow(r, params.p);
        return std::log(std::fabs(y - a * rq) + root_pow(r));
      },
      0.0, 1.0, asympt_tuning::kQuadRelTol);
  const double i3 = integral01_flat([&](double r) {
    const double d = y - a * r;
    const double root = root_lin(r);
    return sgn_y * a / (2.0 * root) +
           (4.0 * b * b * r + a * d) / (2.0 * root * root);
  });
  const double i4s = integral01_flat([&](double s) { return 1.0 / root_pow(s); });
  const double i4r = integral01_flat([&](double r) { return 1.0 / root_lin(r); });
  const double i5 = integral01_flat([&](double r) {
    const double root = root_lin(r);
    return r / (root * (std::fabs(y - a * r) + root));
  });

  const double m1 = std::fabs(y - a);
  const double r1 = std::sqrt((y - a) * (y - a) - 4.0 * b * b);
  const double ln_front = 0.5 * std::log((m1 + r1) / (2.0 * std::fabs(y)));

  DD e = DD(dn) * (DD(p) * dd_log(DD(dn)) - dd_ln2 + DD(i2));
  e = e + DD(ln_front + i3);
  e = e + DD(p * params.sigma * std::fabs(y)) * DD(i4s);
  e = e - DD(sgn_y * params.alpha / p) * DD(i4r);
  e = e - DD(2.0 * params.beta / p) * DD(i5);

  return make_result(ScaledReal::from_log_dd(e, parity_sign(y < 0.0, n)),
                     Region::OuterExponential, std::nullopt, n, y,
                     "key-lemma");
}

ApproximantResult approx_outer_birth_death(const FamilySpec& family, double t,
                                           int n) {
  require(family.is_birth_death(),
          "approx_outer_birth_death: requires a birth-death family");
  require(n >= 1, "approx_outer_birth_death: n must be >= 1");
  const RateExpansion rates = rate_expansion(family);
  const double tp = 4.0 * rates.b;
  require(t > tp || t < 0.0,
          "approx_outer_birth_death: t must exceed t_plus or be negative");
  const double p = static_cast<double>(rates.p);
  const double dn = static_cast<double>(n);
  const double q = 1.0 - tp / t;
  const DD ln_bracket = DD(std::log1p(std::sqrt(q))) - dd_ln2;
  const double integral = outer_exponent_integral(tp, t, rates.p);
  const double nu = standard_form(family).nu(n);

  DD e = DD(dn) * (dd_log(DD(std::fabs(t))) + DD(p) * dd_log(DD(dn)) - DD(p));
  e = e - DD(0.25) * DD(std::log(q));
  e = e + DD(2.0 * dn + (rates.u + rates.v) / p) * ln_bracket;
  e = e + DD(nu * p) * DD(integral);

  return make_result(ScaledReal::from_log_dd(e, parity_sign(t < 0.0, n)),
                     Region::OuterExponential, family, n, t,
                     "pi-outer-general");
}

ApproximantResult approx_outer_standard(const FamilySpec& family, double t,
                                        int n) {
  require(family.is_birth_death(),
          "approx_outer_standard: requires a birth-death family");
  require(n >= 1, "approx_outer_standard: n must be >= 1");
  const RateExpansion rates = rate_expansion(family);
  const double tp = 4.0 * rates.b;
  require(t > tp || t < 0.0,
          "approx_outer_standard: t must exceed t_plus or be negative");
  const double dn = static_cast<double>(n);
  const double q = 1.0 - tp / t;
  const DD ln_bracket = DD(std::log1p(std::sqrt(q))) - dd_ln2;
  const double integral = outer_exponent_integral(tp, t, rates.p);
  const double nu = standard_form(family).nu(n);
  const double c = family.c;

  DD e = DD(dn) * dd_log(DD(std::fabs(t))) - DD(0.25) * DD(std::log(q));
  switch (family.kind) {
    case FamilyKind::BergValent:
      e = e - DD(8.0 * dn + 2.5) * dd_ln2 + dd_log(DD(nu));
      e = e + DD(2.0 * dn + 0.5) * ln_bracket;
      e = e + DD(4.0 * nu) * DD(integral);
      break;
    case FamilyKind::ConradFlajoletI:
      e = e + dd_lgamma(DD((c + 1.0) / 3.0)) +
          DD(2.0) * dd_lgamma(DD((c + 2.0) / 3.0));
      e = e - DD(3.0 * dn) * dd_log3() - DD(c + 1.0) * dd_log(DD(dn));
      e = e - DD(1.5) * dd_log(dd_two_pi / DD(dn)) - (DD(2.0) / DD(3.0)) * dd_ln2;
      e = e + DD(2.0 * dn + 1.0 + (2.0 * c - 1.0) / 3.0) * ln_bracket;
      e = e + DD(3.0 * nu) * DD(integral);
      break;
    default:
      e = e + DD(2.0) * dd_lgamma(DD((c + 1.0) / 3.0)) +
          dd_lgamma(DD((c + 2.0) / 3.0));
      e = e - DD(3.0 * dn) * dd_log3() - DD(c + 0.5) * dd_log(DD(dn));
      e = e - DD(1.5) * dd_log(dd_two_pi / DD(dn)) - (DD(5.0) / DD(6.0)) * dd_ln2;
      e = e + DD(2.0 * dn + 1.0 + (2.0 * c - 2.0) / 3.0) * ln_bracket;
      e = e + DD(3.0 * nu) * DD(integral);
      break;
  }

  return make_result(ScaledReal::from_log_dd(e, parity_sign(t < 0.0, n)),
                     Region::OuterExponential, family, n, t,
                     "pi-outer-general");
}

ApproximantResult approx_outer_chen_ismail(double y, int n) {
  require(n >= 1, "approx_outer_chen_ismail: n must be >= 1");
  require(std::fabs(y) > 1.0, "approx_outer_chen_ismail: requires |y| > 1");
  const double y0 = std::fabs(y);
  const double dn = static_cast<double>(n);
  const double root = std::sqrt(y0 * y0 - 1.0);
  const double ef = elliptic_f(std::asin(1.0 / std::sqrt(y0)), -1.0);

  DD e = DD(2.0 * dn) * (dd_ln2 + dd_log(DD(dn)) - DD(1.0));
  e = e + DD(dn) * DD(std::log(y0 + root));
  e = e + DD(2.0 * dn + 1.0) * DD(std::sqrt(y0) * ef);
  e = e + DD(0.5 * std::log((y0 + root) / (2.0 * root)));

  return make_result(ScaledReal::from_log_dd(e, parity_sign(y < 0.0, n)),
                     Region::OuterExponential, FamilySpec::chen_ismail(), n, y,
                     "fn-outside");
}

ApproximantResult approx_oscillatory(const FamilySpec& family, double t, int n,
                                     double delta) {
  require(n >= 1, "approx_oscillatory: n must be >= 1");
  require(delta > 0.0 && delta < 0.25 * kPi,
          "approx_oscillatory: delta must lie in (0, pi/4)");
  const StandardFormData form = standard_form(family);
  const double nu = form.nu(n);
  const double dn = static_cast<double>(n);

  if (family.kind == FamilyKind::ChenIsmail) {
    const double t0 = std::fabs(t);
    require(t0 >= 8.0 * std::sin(delta) && t0 <= 8.0 * std::cos(delta),
            "approx_oscillatory: |t| outside the oscillatory window");
    const double g = (2.0 / 3.0) * std::pow(-u_upper(family, t0).u, 1.5);
    const double sin_theta = std::sqrt(1.0 - t0 * t0 / 64.0);
    DD e = DD(2.0 * dn) * (dd_ln2 + dd_log(DD(dn)) - DD(1.0));
    e = e + exp_rate_ci() * DD(nu) * DD(std::sqrt(t0));
    e = e - DD(0.5) * DD(std::log(sin_theta));
    e = e + DD(0.5) * dd_ln2;  // cos + sin folded into sqrt(2) cos(. - pi/4)
    const ScaledReal amp =
        ScaledReal::from_log_dd(e, parity_sign(t < 0.0, n));
    const double osc = std::cos(nu * g - 0.25 * kPi);
    return make_result(amp * ScaledReal::from_double(osc), Region::Oscillatory,
                       family, n, t, "fn-inside");
  }

  const double tp = form.t_plus;
  const double sin_d = std::sin(delta), cos_d = std::cos(delta);
  require(t >= tp * sin_d * sin_d && t <= tp * cos_d * cos_d,
          "approx_oscillatory: t outside the oscillatory window");
  const double g = (2.0 / 3.0) * std::pow(-u_upper(family, t).u, 1.5);
  const double c = family.c;

  DD e = scaled_ln(normalization_K(family, n));
  const char* id = "";
  switch (family.kind) {
    case FamilyKind::BergValent:
      e = e + DD(0.5) * dd_ln2 + dd_log(DD(nu));
      e = e - DD(0.25) * DD(std::log(tp - t));
      e = e + exp_rate_bv() * DD(nu) * DD(std::pow(t, 0.25));
      id = "BV-pn-asy";
      break;
    case FamilyKind::ConradFlajoletI:
      e = e + cf_gamma_ln(family) - (DD(7.0) / DD(6.0)) * dd_ln2 -
          DD(1.5) * dd_log(dd_pi);
      e = e - DD(0.25) * DD(std::log(t * (tp - t)));
      e = e - DD((2.0 * c - 1.0) / 6.0) * DD(std::log(dn * dn * dn * t));
      e = e + exp_rate_cf() * DD(nu) * DD(std::cbrt(t));
      id = "M1-pn-asy";
      break;
    default:
      e = e + cf_gamma_ln(family) - (DD(4.0) / DD(3.0)) * dd_ln2 -
          DD(1.5) * dd_log(dd_pi);
      e = e - DD(0.25) * DD(std::log(t * (tp - t)));
      e = e - DD((c - 1.0) / 3.0) * DD(std::log(dn * dn * dn * t));
      e = e + exp_rate_cf() * DD(nu) * DD(std::cbrt(t));
      id = "M2-pn-asy";
      break;
  }
  const ScaledReal amp = ScaledReal::from_log_dd(e, parity_sign(true, n));
  const double osc = std::cos(nu * g - 0.25 * kPi);
  return make_result(amp * ScaledReal::from_double(osc), Region::Oscillatory,
                     family, n, t, id);
}

ApproximantResult approx_airy(const FamilySpec& family, double t, int n) {
  require(n >= 1, "approx_airy: n must be >= 1");
  require(t > 0.0, "approx_airy: t must be positive");
  const StandardFormData form = standard_form(family);
  const double nu = form.nu(n);
  const double tp = form.t_plus;
  const double u = u_upper(family, t).u;
  const double ratio = (t == tp) ? upper_slope_at_tplus(family) : u / (t - tp);
  const ScaledReal ai = airy_ai_scaled(std::cbrt(nu * nu) * u);
  const double c = family.c;

  DD e = scaled_ln(normalization_K(family, n));
  int sign = +1;
  const char* id = "";
  switch (family.kind) {
    case FamilyKind::ChenIsmail:
      // Constant 1/(2*sqrt(2)*pi^{3/2}), pinned against the exact recurrence
      // (mpmath, 60 digits, n = 50 at the band edge).
      e = e - DD(1.5) * dd_ln2 - DD(1.5) * dd_log(dd_pi);
      e = e + exp_rate_ci() * DD(nu) * DD(std::sqrt(t));
      e = e + DD(0.25) * DD(std::log(64.0 * ratio / (t + 8.0)));
      id = "fn-main-for";
      break;
    case FamilyKind::BergValent:
      e = e + DD(0.5) * dd_log(dd_two_pi) + dd_log(DD(nu)) +
          DD(0.25) * DD(std::log(t));
      e = e + exp_rate_bv() * DD(nu) * DD(std::pow(t, 0.25));
      e = e + DD(0.25) * DD(std::log(ratio / t));
      sign = parity_sign(true, n);
      id = "BV-mainfor1";
      break;
    case FamilyKind::ConradFlajoletI:
      e = e + cf_gamma_ln(family) - (DD(7.0) / DD(6.0)) * dd_ln2 -
          dd_log(dd_pi);
      e = e - DD((2.0 * c - 1.0) / 2.0) * dd_log(DD(nu)) -
          DD((2.0 * c - 1.0) / 6.0) * DD(std::log(t));
      e = e + exp_rate_cf() * DD(nu) * DD(std::cbrt(t));
      e = e + DD(0.25) * DD(std::log(ratio / t));
      sign = parity_sign(true, n);
      id = "M1-mainfor1";
      break;
    default:
      e = e + cf_gamma_ln(family) - (DD(4.0) / DD(3.0)) * dd_ln2 -
          dd_log(dd_pi);
      e = e - DD(c - 1.0) * dd_log(DD(nu)) -
          DD((c - 1.0) / 3.0) * DD(std::log(t));
      e = e + exp_rate_cf() * DD(nu) * DD(std::cbrt(t));
      e = e + DD(0.25) * DD(std::log(ratio / t));
      sign = parity_sign(true, n);
      id = "M2-mainfor1";
      break;
  }
  e = e + (DD(1.0) / DD(6.0)) * dd_log(DD(nu));

  return make_result(ScaledReal::from_log_dd(e, sign) * ai,
                     Region::UpperTurning, family, n, t, id);
}

ApproximantResult approx_bessel(const FamilySpec& family, double t, int n,
                                double M) {
  require(family.is_birth_death(),
          "approx_bessel: requires a birth-death family");
  require(n >= 1, "approx_bessel: n must be >= 1");
  const StandardFormData form = standard_form(family);
  const double tp = form.t_plus;
  if (M == 0.0) M = 0.5 * tp;
  require(M > 0.0 && M < tp, "approx_bessel: M must lie in (0, t_plus)");
  require(t > 0.0, "approx_bessel: t must be positive");
  require(t <= M, "approx_bessel: t must not exceed M");
  const double nu = form.nu(n);
  const double us = u_lower(family, t).u;
  const double arg = nu * std::sqrt(us);
  const double c = family.c;

  DD e = scaled_ln(normalization_K(family, n));
  double chi = 0.0;
  int num = 1, den = 2;
  const char* id = "";
  switch (family.kind) {
    case FamilyKind::BergValent: {
      const double rate = (exp_rate_bv() * DD(nu) * DD(std::pow(t, 0.25))).to_double();
      e = e + DD(0.5) * dd_log(dd_pi) + DD(1.5) * dd_log(DD(nu)) +
          DD(0.25) * DD(std::log(t));
      e = e + DD(rate);
      chi = rate;
      num = 1, den = 2;
      id = "BV-Bessel-formula";
      break;
    }
    case FamilyKind::ConradFlajoletI:
      e = e + cf_gamma_ln(family) + DD(1.0 - c) * dd_log(DD(nu)) -
          (DD(5.0) / DD(3.0)) * dd_ln2 - dd_log(dd_pi);
      e = e - DD((2.0 * c - 1.0) / 6.0) * DD(std::log(t));
      e = e + exp_rate_cf() * DD(nu) * DD(std::cbrt(t));
      chi = (trig_rate_cf() * DD(nu) * DD(std::cbrt(t))).to_double() -
            c * kPi / 3.0;
      num = 1, den = 3;
      id = "M1-Bessel";
      break;
    default:
      e = e + cf_gamma_ln(family) + DD(1.5 - c) * dd_log(DD(nu)) -
          (DD(11.0) / DD(6.0)) * dd_ln2 - dd_log(dd_pi);
      e = e - DD((c - 1.0) / 3.0) * DD(std::log(t));
      e = e + exp_rate_cf() * DD(nu) * DD(std::cbrt(t));
      chi = (trig_rate_cf() * DD(nu) * DD(std::cbrt(t))).to_double() -
            c * kPi / 3.0;
      num = 2, den = 3;
      id = "M2-Bessel";
      break;
  }
  e = e + DD(0.25) * DD(std::log(us / (t * (tp - t))));

  const BesselOrder order(num, den);
  const double trig =
      std::sin(chi) * bessel(BesselKind::J, order, arg).value -
      std::cos(chi) * bessel(BesselKind::Y, order, arg).value;
  return make_result(
      ScaledReal::from_log_dd(e, +1) * ScaledReal::from_double(trig),
      Region::LowerTurning, family, n, t, id);
}

ApproximantResult approx_edge(const FamilySpec& family, double s, int n,
                              double s_max) {
  require(n >= 1, "approx_edge: n must be >= 1");
  require(s_max > 0.0, "approx_edge: s_max must be positive");
  require(std::fabs(s) <= s_max, "approx_edge: |s| exceeds s_max");
  const double nu = standard_form(family).nu(n);
  const double ai = airy(AiryKind::Ai, s).value;

  DD e = scaled_ln(normalization_K(family, n)) +
         (DD(1.0) / DD(6.0)) * dd_log(DD(nu));
  int sign = +1;
  const char* id = "";
  switch (family.kind) {
    case FamilyKind::ChenIsmail:
      e = e - (DD(11.0) / DD(6.0)) * dd_ln2 - DD(1.5) * dd_log(dd_pi);
      id = "fn-airy";
      break;
    case FamilyKind::BergValent:
      e = e + DD(0.5) * dd_log(dd_pi) - (DD(14.0) / DD(3.0)) * dd_ln2;
      sign = parity_sign(true, n);
      id = "bv-airy";
      break;
    case FamilyKind::ConradFlajoletI:
      e = e + cf_gamma_ln(family) - (DD(5.0) / DD(3.0)) * dd_log3();
      e = e - DD(2.0) * dd_ln2 - dd_log(dd_pi);
      sign = parity_sign(true, n);
      id = "M1-airy";
      break;
    default:
      e = e + cf_gamma_ln(family) - (DD(5.0) / DD(3.0)) * dd_log3();
      e = e - (DD(13.0) / DD(6.0)) * dd_ln2 - dd_log(dd_pi);
      sign = parity_sign(true, n);
      id = "M2-airy";
      break;
  }

  return make_result(
      ScaledReal::from_log_dd(e, sign) * ScaledReal::from_double(ai),
      Region::UpperTurning, family, n, s, id);
}

ApproximantResult orthonormal_edge(const FamilySpec& family, double s, int n,
                                   double s_max) {
  require(n >= 1, "orthonormal_edge: n must be >= 1");
  require(s_max > 0.0, "orthonormal_edge: s_max must be positive");
  require(std::fabs(s) <= s_max, "orthonormal_edge: |s| exceeds s_max");
  const double nu = standard_form(family).nu(n);
  const double ai = airy(AiryKind::Ai, s).value;

  DD e = DD(orthonormal_edge_nu_exponent(family)) * dd_log(DD(nu));
  const char* id = "";
  switch (family.kind) {
    case FamilyKind::ChenIsmail:
      e = e - (DD(4.0) / DD(3.0)) * dd_ln2;
      id = "fn-airy";
      break;
    case FamilyKind::BergValent:
      e = e - (DD(14.0) / DD(3.0)) * dd_ln2;
      id = "bv-airy";
      break;
    case FamilyKind::ConradFlajoletI:
      e = e + DD(0.5) * dd_log(DD(family.c + 1.0)) +
          dd_lgamma(DD(family.c + 1.0));
      e = e - (DD(1.0) / DD(3.0)) * dd_ln2 - (DD(5.0) / DD(3.0)) * dd_log3();
      id = "M1-airy";
      break;
    default:
      e = e + dd_lgamma(DD(family.c + 1.0));
      e = e - (DD(1.0) / DD(3.0)) * dd_ln2 - (DD(5.0) / DD(3.0)) * dd_log3();
      id = "M2-airy";
      break;
  }

  return make_result(
      ScaledReal::from_log_dd(e, +1) * ScaledReal::from_double(ai),
      Region::UpperTurning, family, n, s, id);
}

double edge_abscissa(const FamilySpec& family, double s, int n) {
  require(n >= 1, "edge_abscissa: n must be >= 1");
  const double nu = standard_form(family).nu(n);
  switch (family.kind) {
    case FamilyKind::ChenIsmail:
      return 8.0 * nu * nu + 8.0 * std::cbrt(2.0) * s * std::pow(nu, 4.0 / 3.0);
    case FamilyKind::BergValent:
      return 1024.0 * nu * nu * nu * nu +
             1024.0 * std::cbrt(4.0) * s * std::pow(nu, 10.0 / 3.0);
    default:
      return 108.0 * nu * nu * nu +
             54.0 * std::cbrt(18.0) * s * std::pow(nu, 7.0 / 3.0);
  }
}

ScaledReal edge_weight(const FamilySpec& family, double x) {
  switch (family.kind) {
    case FamilyKind::ChenIsmail: {
      // w(x)^{1/2} with w(x) = 1/(2 cos(y) + 2 cosh(y)), y = rate sqrt(x/2);
      // even in the square root, so |x| serves both signs.  The log1p form
      // keeps the cosh tail exact once e^{-y} underflows.
      const double y =
          (weight_rate_ci() * DD(std::sqrt(std::fabs(x) / 2.0))).to_double();
      const double ln_half =
          -0.5 * (y + std::log1p(std::exp(-2.0 * y) +
                                 2.0 * std::cos(y) * std::exp(-y)));
      return ScaledReal::from_log(ln_half, +1);
    }
    case FamilyKind::BergValent: {
      require(x > 0.0, "edge_weight: x must be positive for this family");
      const DD e = DD(-0.25) * DD(std::log(x)) -
                   exp_rate_bv() * DD(std::pow(x, 0.25));
      return ScaledReal::from_log_dd(e, +1);
    }
    case FamilyKind::ConradFlajoletI: {
      require(x > 0.0, "edge_weight: x must be positive for this family");
      const DD e = DD((2.0 * family.c - 1.0) / 6.0) * DD(std::log(x)) -
                   exp_rate_cf() * DD(std::cbrt(x));
      return ScaledReal::from_log_dd(e, +1);
    }
    default: {
      require(x > 0.0, "edge_weight: x must be positive for this family");
      const DD e = DD((family.c - 1.0) / 3.0) * DD(std::log(x)) -
                   exp_rate_cf() * DD(std::cbrt(x));
      return ScaledReal::from_log_dd(e, +1);
    }
  }
}

double orthonormal_edge_nu_exponent(const FamilySpec& family) {
  switch (family.kind) {
    case FamilyKind::ChenIsmail: return -5.0 / 6.0;
    case FamilyKind::BergValent: return -11.0 / 6.0;
    default: return -4.0 / 3.0;
  }
}

}  // namespace indpoly
