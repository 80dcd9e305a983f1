#include "indpoly/phase.hpp"

#include <cmath>
#include <stdexcept>

#include "indpoly/specfun.hpp"

namespace indpoly {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

// Oscillatory side of the upper map: g(t) = (2/3) [-U(t)]^{3/2}, t_- < t < t_+.
double upper_g(const FamilySpec& f, double t) {
  switch (f.kind) {
    case FamilyKind::ChenIsmail:
      // Even weight: the phase from t to the upper edge plus the mirrored
      // phase from -t is the full half-period pi.
      if (t < 0.0) return kPi - upper_g(f, -t);
      return std::acos(t / 8.0) -
             std::sqrt(2.0 * t) / 8.0 *
                 incomplete_beta(1.0 - t * t / 64.0, 0.5, 0.25);
    case FamilyKind::BergValent:
      return std::acos((t - 512.0) / 512.0) -
             std::sqrt(2.0) * std::pow(t, 0.25) / 8.0 *
                 incomplete_beta(1.0 - t / 1024.0, 0.5, 0.25);
    default:  // both Conrad-Flajolet kinds share the maps
      return std::acos((t - 54.0) / 54.0) -
             std::cbrt(2.0 * t) / 6.0 *
                 incomplete_beta(1.0 - t / 108.0, 0.5, 1.0 / 6.0);
  }
}

// Exponential side of the upper map: h(t) = (2/3) [U(t)]^{3/2}, t > t_+.
double upper_h(const FamilySpec& f, double t) {
  switch (f.kind) {
    case FamilyKind::ChenIsmail:
      return std::sqrt(t / 2.0) *
                 (elliptic_f(kPi / 2.0, -1.0) -
                  elliptic_f(std::asin(std::sqrt(8.0 / t)), -1.0)) -
             std::log1p((t - 8.0 + std::sqrt(t * t - 64.0)) / 8.0);
    case FamilyKind::BergValent:
      return std::sqrt(2.0) * std::pow(t, 0.25) / 8.0 *
                 incomplete_beta(1.0 - 1024.0 / t, 0.5, 0.25) -
             std::log1p((t - 1024.0 + std::sqrt(t * (t - 1024.0))) / 512.0);
    default:
      return std::cbrt(2.0 * t) / 6.0 *
                 incomplete_beta(1.0 - 108.0 / t, 0.5, 1.0 / 3.0) -
             std::log1p((t - 108.0 + std::sqrt(t * (t - 108.0))) / 54.0);
  }
}

// Signed square root of the lower map: w(t) = sign(t) |U*(t)|^{1/2}, t < t_+.
double lower_w(const FamilySpec& f, double t) {
  if (f.kind == FamilyKind::BergValent) {
    if (t <= 0.0) {
      double integral =
          0.125 * std::sqrt(-t) * hyp2f1_special(Hyp2F1Which::BV, t / 1024.0);
      return -(integral -
               std::log1p((-t + std::sqrt(t * (t - 1024.0))) / 512.0));
    }
    return std::sqrt(2.0) * std::pow(t, 0.25) / 8.0 *
               incomplete_beta(t / 1024.0, 0.25, 0.5) -
           std::acos((512.0 - t) / 512.0);
  }
  if (t <= 0.0) {
    double integral =
        std::sqrt(-t / 3.0) * hyp2f1_special(Hyp2F1Which::CF, t / 108.0);
    return -(integral - std::log1p((-t + std::sqrt(t * (t - 108.0))) / 54.0));
  }
  return std::cbrt(2.0 * t) / 6.0 *
             incomplete_beta(t / 108.0, 1.0 / 6.0, 0.5) -
         std::acos((54.0 - t) / 54.0);
}

double upper_exact(const FamilySpec& f, double t, double t_plus) {
  if (t > t_plus) return std::pow(1.5 * upper_h(f, t), 2.0 / 3.0);
  return -std::pow(1.5 * upper_g(f, t), 2.0 / 3.0);
}

double lower_exact(const FamilySpec& f, double t) {
  double w = lower_w(f, t);
  return (t > 0.0) ? w * w : -(w * w);
}

// Quadratic series coefficient at the turning point, by Richardson
// extrapolation of the exact branch just outside the surrogate window
// (inside it the defining formulas cancel to zero).
double upper_c2(const FamilySpec& f) {
  double tp = standard_form(f).t_plus;
  double slope = upper_slope_at_tplus(f);
  double h0 = 2.0 * phase_tuning::kWindowFrac * tp;
  auto q = [&](double h) {
    return (upper_exact(f, tp + h, tp) - slope * h) / (h * h);
  };
  return 2.0 * q(h0) - q(2.0 * h0);
}

double lower_c2(const FamilySpec& f) {
  double tp = standard_form(f).t_plus;
  double slope = lower_slope_at_zero(f);
  double h0 = 2.0 * phase_tuning::kWindowFrac * tp;
  auto q = [&](double h) { return (lower_exact(f, h) - slope * h) / (h * h); };
  return 2.0 * q(h0) - q(2.0 * h0);
}

double cached_upper_c2(const FamilySpec& f) {
  switch (f.kind) {
    case FamilyKind::ChenIsmail: {
      static const double c = upper_c2(FamilySpec::chen_ismail());
      return c;
    }
    case FamilyKind::BergValent: {
      static const double c = upper_c2(FamilySpec::berg_valent());
      return c;
    }
    default: {
      static const double c = upper_c2(FamilySpec::conrad_flajolet_1(1.0));
      return c;
    }
  }
}

double cached_lower_c2(const FamilySpec& f) {
  if (f.kind == FamilyKind::BergValent) {
    static const double c = lower_c2(FamilySpec::berg_valent());
    return c;
  }
  static const double c = lower_c2(FamilySpec::conrad_flajolet_1(1.0));
  return c;
}

}  // namespace

const char* region_name(Region r) {
  switch (r) {
    case Region::OuterExponential: return "outer-exponential";
    case Region::Oscillatory: return "oscillatory";
    case Region::UpperTurning: return "upper-turning";
    case Region::LowerTurning: return "lower-turning";
  }
  return "?";
}

double upper_slope_at_tplus(const FamilySpec& family) {
  switch (family.kind) {
    case FamilyKind::ChenIsmail: return 1.0 / (8.0 * std::cbrt(2.0));
    case FamilyKind::BergValent: return 1.0 / (1024.0 * std::cbrt(4.0));
    default: return 1.0 / (54.0 * std::cbrt(18.0));
  }
}

double lower_slope_at_zero(const FamilySpec& family) {
  require(family.is_birth_death(),
          "lower_slope_at_zero: no lower map for this family");
  return family.kind == FamilyKind::BergValent ? 1.0 / 256.0 : 4.0 / 27.0;
}

PhaseValue u_upper(const FamilySpec& family, double t) {
  StandardFormData d = standard_form(family);
  require(t > d.t_minus, "u_upper: t at or below the lower transition point");
  PhaseValue out{family, t, 0.0, PhaseMap::Upper, false};
  if (std::abs(t - d.t_plus) <= phase_tuning::kWindowFrac * d.t_plus) {
    double dt = t - d.t_plus;
    out.u = upper_slope_at_tplus(family) * dt + cached_upper_c2(family) * dt * dt;
    out.used_series = true;
  } else {
    out.u = upper_exact(family, t, d.t_plus);
  }
  return out;
}

PhaseValue u_lower(const FamilySpec& family, double t) {
  require(family.is_birth_death(), "u_lower: no lower map for this family");
  StandardFormData d = standard_form(family);
  require(t < d.t_plus, "u_lower: t at or above the upper transition point");
  PhaseValue out{family, t, 0.0, PhaseMap::Lower, false};
  if (std::abs(t) <= phase_tuning::kWindowFrac * d.t_plus) {
    out.u = lower_slope_at_zero(family) * t + cached_lower_c2(family) * t * t;
    out.used_series = true;
  } else {
    out.u = lower_exact(family, t);
  }
  return out;
}

Region classify_region(const FamilySpec& family, double t, int n) {
  require(n >= 1, "classify_region: n must be positive");
  StandardFormData d = standard_form(family);
  double nu = d.nu(n);
  if (t > d.t_minus) {
    double u = u_upper(family, t).u;
    if (std::pow(nu, 2.0 / 3.0) * std::abs(u) <= phase_tuning::kUpperTurningMax)
      return Region::UpperTurning;
  }
  if (family.is_birth_death() && t < d.t_plus) {
    double us = u_lower(family, t).u;
    if (nu * std::sqrt(std::abs(us)) <= phase_tuning::kLowerTurningMax)
      return Region::LowerTurning;
  }
  if (t > d.t_minus && t < d.t_plus) return Region::Oscillatory;
  return Region::OuterExponential;
}

}  // namespace indpoly
