#include "indpoly/families.hpp"

#include <cmath>
#include <stdexcept>

#include "indpoly/dd.hpp"

namespace indpoly {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

}  // namespace

FamilySpec FamilySpec::chen_ismail() { return {FamilyKind::ChenIsmail, 0.0}; }
FamilySpec FamilySpec::berg_valent() { return {FamilyKind::BergValent, 0.0}; }

FamilySpec FamilySpec::conrad_flajolet_1(double c) {
  require(c > 0.0 && std::isfinite(c), "FamilySpec: c must be positive");
  return {FamilyKind::ConradFlajoletI, c};
}

FamilySpec FamilySpec::conrad_flajolet_2(double c) {
  require(c > 0.0 && std::isfinite(c), "FamilySpec: c must be positive");
  return {FamilyKind::ConradFlajoletII, c};
}

FamilySpec FamilySpec::from_name(const std::string& name, double c) {
  if (name == "chen-ismail") return chen_ismail();
  if (name == "berg-valent") return berg_valent();
  if (name == "cf1") return conrad_flajolet_1(c);
  if (name == "cf2") return conrad_flajolet_2(c);
  throw std::domain_error("FamilySpec: unknown family name '" + name + "'");
}

std::string FamilySpec::name() const {
  switch (kind) {
    case FamilyKind::ChenIsmail: return "chen-ismail";
    case FamilyKind::BergValent: return "berg-valent";
    case FamilyKind::ConradFlajoletI: return "cf1";
    case FamilyKind::ConradFlajoletII: return "cf2";
  }
  return "?";
}

StandardFormData standard_form(const FamilySpec& family) {
  StandardFormData d;
  switch (family.kind) {
    case FamilyKind::ChenIsmail:
      d.theta = 2;
      d.alpha0 = 0.25;
      d.alpha1 = -0.25;
      d.beta0 = d.beta1 = d.beta2 = 0.0;  // B_n is identically zero
      d.tau0 = 0.5;
      d.t_plus = 8.0;
      d.t_minus = -8.0;
      break;
    case FamilyKind::BergValent:
      d.theta = 4;
      d.alpha0 = 1.0 / 256.0;
      d.alpha1 = -1.0 / 256.0;
      d.beta0 = -2.0;
      d.beta1 = 0.0;
      d.beta2 = 0.0;
      d.tau0 = 0.25;
      d.t_plus = 1024.0;
      d.t_minus = 0.0;
      break;
    case FamilyKind::ConradFlajoletI:
      d.theta = 3;
      d.alpha0 = 1.0 / 27.0;
      d.alpha1 = -(family.c + 1.0) / 27.0;
      d.beta0 = -2.0;
      d.beta1 = 0.0;
      d.beta2 = 2.0 / 9.0;
      d.tau0 = (family.c + 1.0) / 3.0;
      d.t_plus = 108.0;
      d.t_minus = 0.0;
      break;
    case FamilyKind::ConradFlajoletII:
      d.theta = 3;
      d.alpha0 = 1.0 / 27.0;
      d.alpha1 = -(2.0 * family.c + 1.0) / 54.0;
      d.beta0 = -2.0;
      d.beta1 = 0.0;
      d.beta2 = 5.0 / 36.0;
      d.tau0 = (2.0 * family.c + 1.0) / 6.0;
      d.t_plus = 108.0;
      d.t_minus = 0.0;
      break;
  }
  return d;
}

double birth_rate(const FamilySpec& family, long long n) {
  require(n >= 0, "birth_rate: n must be nonnegative");
  double nn = static_cast<double>(n), c = family.c;
  switch (family.kind) {
    case FamilyKind::ChenIsmail:
      throw std::domain_error("birth_rate: chen-ismail is not a birth-death family");
    case FamilyKind::BergValent:
      return (4.0 * nn + 1.0) * (4.0 * nn + 2.0) * (4.0 * nn + 2.0) *
             (4.0 * nn + 3.0);
    case FamilyKind::ConradFlajoletI:
      return (3.0 * nn + c + 1.0) * (3.0 * nn + c + 2.0) * (3.0 * nn + c + 2.0);
    case FamilyKind::ConradFlajoletII:
      return (3.0 * nn + c + 1.0) * (3.0 * nn + c + 1.0) * (3.0 * nn + c + 2.0);
  }
  return 0.0;
}

double death_rate(const FamilySpec& family, long long n) {
  require(n >= 0, "death_rate: n must be nonnegative");
  double nn = static_cast<double>(n), c = family.c;
  switch (family.kind) {
    case FamilyKind::ChenIsmail:
      throw std::domain_error("death_rate: chen-ismail is not a birth-death family");
    case FamilyKind::BergValent:
      return (4.0 * nn - 1.0) * (4.0 * nn) * (4.0 * nn) * (4.0 * nn + 1.0);
    case FamilyKind::ConradFlajoletI:
      return (3.0 * nn + c) * (3.0 * nn + c) * (3.0 * nn + c + 1.0);
    case FamilyKind::ConradFlajoletII:
      return (3.0 * nn + c - 1.0) * (3.0 * nn + c) * (3.0 * nn + c);
  }
  return 0.0;
}

double monic_alpha(const FamilySpec& family, long long n) {
  require(n >= 0, "monic_alpha: n must be nonnegative");
  if (family.kind == FamilyKind::ChenIsmail) return 0.0;
  return birth_rate(family, n) + death_rate(family, n);
}

std::pair<double, double> monic_coeffs(const FamilySpec& family, long long n) {
  require(n >= 1, "monic_coeffs: n must be >= 1");
  if (family.kind == FamilyKind::ChenIsmail) {
    double nn = static_cast<double>(n);
    double n2 = 4.0 * nn * nn;
    return {0.0, n2 * (n2 - 1.0)};
  }
  return {monic_alpha(family, n),
          birth_rate(family, n - 1) * death_rate(family, n)};
}

namespace {

// log K_n in double-double, per the family's Gamma-product definition.
DD log_K(const FamilySpec& family, long long n) {
  double nn = static_cast<double>(n), c = family.c;
  switch (family.kind) {
    case FamilyKind::ChenIsmail:
      // 2^{4n} Gamma((n+1)/2)^2 Gamma((n+3/2)/2) Gamma((n+1/2)/2)
      return DD(4.0 * nn) * dd_ln2 + DD(2.0) * dd_lgamma(DD((nn + 1.0) / 2.0)) +
             dd_lgamma(DD((nn + 1.5) / 2.0)) + dd_lgamma(DD((nn + 0.5) / 2.0));
    case FamilyKind::BergValent:
      // Gamma((n+3/4)/2) Gamma((n+1)/2)^2 / (Gamma((n+3/2)/2)^2 Gamma((n+7/4)/2))
      return dd_lgamma(DD((nn + 0.75) / 2.0)) +
             DD(2.0) * dd_lgamma(DD((nn + 1.0) / 2.0)) -
             DD(2.0) * dd_lgamma(DD((nn + 1.5) / 2.0)) -
             dd_lgamma(DD((nn + 1.75) / 2.0));
    case FamilyKind::ConradFlajoletI:
      // Gamma((n+c/3+1)/2)^2 / Gamma((n+c/3+5/3)/2)^2
      return DD(2.0) * (dd_lgamma(DD((nn + c / 3.0 + 1.0) / 2.0)) -
                        dd_lgamma(DD((nn + c / 3.0 + 5.0 / 3.0) / 2.0)));
    case FamilyKind::ConradFlajoletII:
      // Gamma((n+c/3+2/3)/2) Gamma((n+c/3+1)/2)^2
      //   / (Gamma((n+c/3+4/3)/2)^2 Gamma((n+c/3+5/3)/2))
      return dd_lgamma(DD((nn + c / 3.0 + 2.0 / 3.0) / 2.0)) +
             DD(2.0) * dd_lgamma(DD((nn + c / 3.0 + 1.0) / 2.0)) -
             DD(2.0) * dd_lgamma(DD((nn + c / 3.0 + 4.0 / 3.0) / 2.0)) -
             dd_lgamma(DD((nn + c / 3.0 + 5.0 / 3.0) / 2.0));
  }
  return DD(0.0);
}

}  // namespace

ScaledReal normalization_K(const FamilySpec& family, long long n) {
  require(n >= 0, "normalization_K: n must be nonnegative");
  return ScaledReal::from_log_dd(log_K(family, n), +1);
}

std::pair<double, double> standard_coeffs(const FamilySpec& family, long long n) {
  require(n >= 0, "standard_coeffs: n must be nonnegative");
  DD dlog = log_K(family, n) - log_K(family, n + 1);
  if (family.kind == FamilyKind::ChenIsmail) {
    double a = ScaledReal::from_log_dd(dlog, +1).to_double();
    return {a, 0.0};
  }
  double lam = birth_rate(family, n);
  double a = ScaledReal::from_log_dd(dlog - dd_log(DD(lam)), +1).to_double();
  return {a, -(lam + death_rate(family, n)) * a};
}

RecurrenceTrace evaluate_standard(const FamilySpec& family, int n, double x) {
  require(n >= 0, "evaluate_standard: n must be nonnegative");
  RecurrenceTrace tr;
  tr.family = family;
  tr.x = x;
  tr.p.reserve(n + 1);
  tr.pi.reserve(n + 1);
  tr.phat.reserve(n + 1);

  // log K_k computed once per degree; each A_k uses adjacent entries.
  std::vector<DD> logK(n + 2, DD(0.0));
  for (int k = 0; k <= n + 1; ++k) logK[k] = log_K(family, k);

  const ScaledReal sx = ScaledReal::from_double(x);
  const ScaledReal one = ScaledReal::from_double(1.0);

  // Standard form: p_{k+1} = (A_k x + B_k) p_k - p_{k-1}.
  tr.p.push_back(one);
  if (n >= 1) {
    std::vector<ScaledReal>& p = tr.p;
    ScaledReal prev = one, cur;
    {
      DD dlog = logK[0] - logK[1];
      if (family.is_birth_death()) {
        double lam0 = birth_rate(family, 0);
        double a0 =
            ScaledReal::from_log_dd(dlog - dd_log(DD(lam0)), +1).to_double();
        double b0 = -(lam0 + death_rate(family, 0)) * a0;
        cur = ScaledReal::from_double(a0) * sx + ScaledReal::from_double(b0);
      } else {
        double a0 = ScaledReal::from_log_dd(dlog, +1).to_double();
        cur = ScaledReal::from_double(a0) * sx;
      }
    }
    p.push_back(cur);
    for (int k = 1; k < n; ++k) {
      DD dlog = logK[k] - logK[k + 1];
      double ak, bk;
      if (family.is_birth_death()) {
        double lam = birth_rate(family, k);
        ak = ScaledReal::from_log_dd(dlog - dd_log(DD(lam)), +1).to_double();
        bk = -(lam + death_rate(family, k)) * ak;
      } else {
        ak = ScaledReal::from_log_dd(dlog, +1).to_double();
        bk = 0.0;
      }
      ScaledReal next =
          (ScaledReal::from_double(ak) * sx + ScaledReal::from_double(bk)) *
              cur -
          prev;
      prev = cur;
      cur = next;
      p.push_back(cur);
    }
  }

  // Monic: pi_{k+1} = (x - alpha_k) pi_k - beta_k pi_{k-1}.
  tr.pi.push_back(one);
  if (n >= 1) {
    ScaledReal prev = one;
    ScaledReal cur = sx - ScaledReal::from_double(monic_alpha(family, 0));
    tr.pi.push_back(cur);
    for (int k = 1; k < n; ++k) {
      auto [al, be] = monic_coeffs(family, k);
      ScaledReal next = (sx - ScaledReal::from_double(al)) * cur -
                        ScaledReal::from_double(be) * prev;
      prev = cur;
      cur = next;
      tr.pi.push_back(cur);
    }
  }

  // Orthonormal: Phat_{k+1} = ((x - a_k) Phat_k - b_k Phat_{k-1}) / b_{k+1},
  // with b_k = sqrt(beta_k).
  tr.phat.push_back(one);
  if (n >= 1) {
    ScaledReal prev = one;
    double b1 = std::sqrt(monic_coeffs(family, 1).second);
    ScaledReal cur =
        (sx - ScaledReal::from_double(monic_alpha(family, 0))) / b1;
    tr.phat.push_back(cur);
    double bk = b1;
    for (int k = 1; k < n; ++k) {
      double al = monic_alpha(family, k);
      double bk1 = std::sqrt(monic_coeffs(family, k + 1).second);
      ScaledReal next = ((sx - ScaledReal::from_double(al)) * cur -
                         ScaledReal::from_double(bk) * prev) /
                        bk1;
      prev = cur;
      cur = next;
      tr.phat.push_back(cur);
      bk = bk1;
    }
  }
  return tr;
}

ScaledReal native_value(const FamilySpec& family, int n, double x) {
  RecurrenceTrace tr = evaluate_standard(family, n, x);
  DD dlog = log_K(family, n) - log_K(family, 0);
  ScaledReal ratio = ScaledReal::from_log_dd(dlog, +1);
  ScaledReal out = ratio * tr.p[n];
  if (family.is_birth_death() && (n % 2) != 0) {
    out.sign = -out.sign;
  }
  return out;
}

ScaledComplex evaluate_orthonormal(const FamilySpec& family, int n,
                                   double z_re, double z_im) {
  require(n >= 0, "evaluate_orthonormal: n must be nonnegative");
  const ScaledReal one = ScaledReal::from_double(1.0);
  const ScaledReal zero{};
  ScaledComplex prev{one, zero};
  if (n == 0) return prev;

  auto step = [&](const ScaledComplex& curv, const ScaledComplex& prevv,
                  double al, double bk, double bk1) {
    // ((z - al) * cur - bk * prev) / bk1, componentwise.
    ScaledReal xr = ScaledReal::from_double(z_re - al);
    ScaledReal xi = ScaledReal::from_double(z_im);
    ScaledComplex out;
    out.re = xr * curv.re - xi * curv.im - bk * prevv.re;
    out.im = xr * curv.im + xi * curv.re - bk * prevv.im;
    out.re = out.re / bk1;
    out.im = out.im / bk1;
    return out;
  };

  double b1 = std::sqrt(monic_coeffs(family, 1).second);
  ScaledComplex cur = step({one, zero}, {zero, zero}, monic_alpha(family, 0),
                           0.0, b1);
  double bk = b1;
  for (int k = 1; k < n; ++k) {
    double bk1 = std::sqrt(monic_coeffs(family, k + 1).second);
    ScaledComplex next = step(cur, prev, monic_alpha(family, k), bk, bk1);
    prev = cur;
    cur = next;
    bk = bk1;
  }
  return cur;
}

}  // namespace indpoly
