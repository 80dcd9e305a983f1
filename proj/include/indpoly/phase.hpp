// Turning-point phase maps: the upper map U(t) vanishing at t_+ and the
// lower map U*(t) vanishing at 0, with linear series surrogates inside a
// small window around each turning point where the defining formulas
// suffer catastrophic cancellation.
#pragma once

#include "indpoly/families.hpp"

namespace indpoly {

enum class PhaseMap { Upper, Lower };

enum class Region { OuterExponential, Oscillatory, UpperTurning, LowerTurning };

const char* region_name(Region r);

struct PhaseValue {
  FamilySpec family;
  double t = 0.0;
  double u = 0.0;
  PhaseMap map = PhaseMap::Upper;
  bool used_series = false;
};

// Module constants: series-surrogate window and classification thresholds.
namespace phase_tuning {
// |t - t_+| (resp. |t|) below window_frac * t_+ switches to the surrogate.
inline constexpr double kWindowFrac = 1e-3;
inline constexpr double kUpperTurningMax = 2.0;  // |nu^{2/3} U| threshold
inline constexpr double kLowerTurningMax = 4.0;  // |nu U*^{1/2}| threshold
}  // namespace phase_tuning

// Upper map: u < 0 on (t_-, t_+), 0 at t_+, > 0 beyond; strictly increasing.
// Domain: t > t_- (ChenIsmail: t > -8, by evenness; birth-death: t > 0).
PhaseValue u_upper(const FamilySpec& family, double t);

// Lower map (birth-death families only): u < 0 for t < 0, 0 at 0, > 0 on
// (0, t_+); strictly increasing.  Domain: t < t_+.
PhaseValue u_lower(const FamilySpec& family, double t);

// Slopes of the maps at their turning points (exact closed forms).
double upper_slope_at_tplus(const FamilySpec& family);
double lower_slope_at_zero(const FamilySpec& family);

// Recommended approximant regime for evaluating degree n at x = nu^theta t.
Region classify_region(const FamilySpec& family, double t, int n);

}  // namespace indpoly
