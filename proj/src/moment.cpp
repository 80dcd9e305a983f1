// Moment-problem diagnostics: the explicit quartic-recurrence weights, series
// convergence at non-real points, and the edge-exponent pattern 1/6 - 1/(2m).
#include "indpoly/moment.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "indpoly/asympt.hpp"

namespace indpoly {

namespace {

// rho = 2 sqrt(pi) Gamma(5/4) / Gamma(3/4), the rate in the weight exponent.
constexpr double kRho = 2.6220575542921198;

constexpr double kLn2 = 0.69314718055994531;

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

// Least-squares slope of ys against xs.
double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

WeightSample chen_ismail_weight(double x, double alpha) {
  require(std::fabs(alpha) < 1.0,
          "chen_ismail_weight: alpha must be in (-1, 1)");
  // cos y + cosh y and (sin y sinh y)^2 with y = rho sqrt(x/2) are even power
  // series in x, so the weight equals its value at |x|.  Factoring e^{-y} out
  // of every transcendental keeps all intermediates finite:
  //   (cos y + cosh y) e^{-y}   = cos(y) e^{-y} + (1 + e^{-2y}) / 2,
  //   (cos y cosh y + 1) e^{-y} = cos(y) (1 + e^{-2y}) / 2 + e^{-y},
  //   (sin y sinh y) e^{-y}     = sin(y) (1 - e^{-2y}) / 2,
  // and the denominator is rewritten through the cancellation-free identity
  //   (cos y + cosh y)^2 - a^2 (sin y sinh y)^2
  //       = (cos y cosh y + 1)^2 + (1 - a^2) (sin y sinh y)^2.
  const double y = kRho * std::sqrt(std::fabs(x) / 2.0);
  const double e1 = std::exp(-y);
  const double e2 = e1 * e1;
  const double cy = std::cos(y);
  const double sy = std::sin(y);
  const double num = cy * e1 + 0.5 * (1.0 + e2);
  const double d1 = cy * 0.5 * (1.0 + e2) + e1;
  const double d2 = sy * 0.5 * (1.0 - e2);
  const double one_m_a2 = (1.0 - alpha) * (1.0 + alpha);
  WeightSample out;
  out.x = x;
  out.alpha = alpha;
  out.w = std::sqrt(one_m_a2) * num * e1 /
          (2.0 * (d1 * d1 + one_m_a2 * d2 * d2));
  return out;
}

IndeterminacyReport indeterminacy_series(const FamilySpec& family,
                                         std::complex<double> z, int N) {
  require(z.imag() != 0.0, "indeterminacy_series: z must be non-real");
  require(N >= 8 && N <= 5000,
          "indeterminacy_series: N must be in [8, 5000]");

  IndeterminacyReport report;
  report.family = family;
  report.z = z;
  report.partial_sums.assign(static_cast<std::size_t>(N) + 1, 0.0);

  // One pass of the orthonormal recurrence
  //   Phat_{n+1} = ((z - alpha_n) Phat_n - b_n Phat_{n-1}) / b_{n+1},
  // b_k = sqrt(beta_k), carrying a shared power-of-two exponent so that the
  // polynomially growing early terms at large |z| cannot overflow.  The terms
  // agree with evaluate_orthonormal to rounding error.
  std::complex<double> prev = 0.0;
  std::complex<double> cur = 1.0;
  long long exp2 = 0;  // true value of Phat_n is cur * 2^exp2
  double b_n = 0.0;
  std::vector<double> log_term(static_cast<std::size_t>(N) + 1, 0.0);
  for (int n = 0; n < N; ++n) {
    const double b_n1 = std::sqrt(monic_coeffs(family, n + 1).second);
    const std::complex<double> next =
        ((z - monic_alpha(family, n)) * cur - b_n * prev) / b_n1;
    prev = cur;
    cur = next;
    b_n = b_n1;

    const double mag = std::max(std::fabs(cur.real()), std::fabs(cur.imag()));
    require(mag > 0.0 && std::isfinite(mag),
            "indeterminacy_series: recurrence left double range");
    int e = 0;
    std::frexp(mag, &e);
    if (e != 0) {
      cur = {std::ldexp(cur.real(), -e), std::ldexp(cur.imag(), -e)};
      prev = {std::ldexp(prev.real(), -e), std::ldexp(prev.imag(), -e)};
      exp2 += e;
    }

    // |Phat_{n+1}(z)|^2 = norm(cur) * 2^{2 exp2}; the power-of-two rescale is
    // exact, saturating to inf / 0 outside double range.
    const double nrm = std::norm(cur);
    log_term[static_cast<std::size_t>(n) + 1] =
        std::log(nrm) + 2.0 * static_cast<double>(exp2) * kLn2;
    const long long e2 = 2 * exp2;
    double term;
    if (e2 > 2100) {
      term = std::numeric_limits<double>::infinity();
    } else if (e2 < -2200) {
      term = 0.0;
    } else {
      term = std::ldexp(nrm, static_cast<int>(e2));
    }
    report.partial_sums[static_cast<std::size_t>(n) + 1] =
        report.partial_sums[static_cast<std::size_t>(n)] + term;
  }

  const int n_lo = std::max(1, N / 4);
  std::vector<double> lx, ly;
  lx.reserve(static_cast<std::size_t>(N - n_lo) + 1);
  ly.reserve(static_cast<std::size_t>(N - n_lo) + 1);
  for (int n = n_lo; n <= N; ++n) {
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(log_term[static_cast<std::size_t>(n)]);
  }
  report.fitted_decay_slope = lsq_slope(lx, ly);
  return report;
}

double conjecture_exponent(double m) {
  require(m > 0.0, "conjecture_exponent: m must be positive");
  return 1.0 / 6.0 - 0.5 / m;
}

ConjectureCheck conjecture_check(const FamilySpec& family) {
  const StandardFormData form = standard_form(family);
  ConjectureCheck out;
  // The transition point grows like t_+ nu^theta while -log w grows linearly
  // in nu there, so -log w(x) = O(x^{1/theta}) and m = 1/theta.
  out.m = 1.0 / static_cast<double>(form.theta);
  out.k_formula = conjecture_exponent(out.m);

  std::vector<double> lx, ly;
  for (int n : {25, 50, 100, 200}) {
    lx.push_back(std::log(form.nu(n)));
    ly.push_back(orthonormal_edge(family, 0.0, n).value.ln_abs());
  }
  out.k_observed = lsq_slope(lx, ly);
  out.consistent = std::fabs(out.k_observed - out.k_formula) <= 0.05;
  return out;
}

TailEnvelope weight_tail_envelope(const FamilySpec& family, double x) {
  require(x > 0.0, "weight_tail_envelope: x must be positive");
  // edge_weight is the multiplier w(x)^{1/2} (exactly, for ChenIsmail; as the
  // inferred half-envelope for the birth-death families), so its square is
  // the envelope itself.
  const ScaledReal half = edge_weight(family, x);
  TailEnvelope out;
  out.value = (half * half).to_double();
  out.conjectured = family.kind != FamilyKind::ChenIsmail;
  return out;
}

}  // namespace indpoly
