#include "indpoly/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "indpoly/asympt.hpp"
#include "indpoly/quad.hpp"
#include "indpoly/specfun.hpp"

namespace indpoly {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}

// Half-width of the Gershgorin row interval centred at diag[i].
double gershgorin_radius(const JacobiMatrix& matrix, int i) {
  double r = 0.0;
  if (i > 0) r += matrix.offdiag[static_cast<std::size_t>(i) - 1];
  if (i + 1 < matrix.n) r += matrix.offdiag[static_cast<std::size_t>(i)];
  return r;
}

}  // namespace

JacobiMatrix build_jacobi(const FamilySpec& family, int n) {
  require(n >= 1, "build_jacobi: n must be >= 1");
  JacobiMatrix matrix;
  matrix.n = n;
  matrix.diag.reserve(static_cast<std::size_t>(n));
  matrix.offdiag.reserve(static_cast<std::size_t>(n) - 1);
  matrix.diag.push_back(monic_alpha(family, 0));
  for (long long k = 1; k < n; ++k) {
    const auto [alpha, beta] = monic_coeffs(family, k);
    matrix.diag.push_back(alpha);
    matrix.offdiag.push_back(std::sqrt(beta));
  }
  return matrix;
}

int sturm_count(const JacobiMatrix& matrix, double mu) {
  int count = 0;
  double d = 1.0;
  for (int i = 0; i < matrix.n; ++i) {
    const double off =
        (i > 0) ? matrix.offdiag[static_cast<std::size_t>(i) - 1] : 0.0;
    d = (matrix.diag[static_cast<std::size_t>(i)] - mu) - off * off / d;
    // A vanishing pivot is counted as negative; IEEE infinities from the
    // division recover on the next step.
    if (d == 0.0) d = -std::numeric_limits<double>::min();
    if (d < 0.0) ++count;
  }
  return count;
}

ZeroSet compute_zeros(const FamilySpec& family, int n, double tol) {
  require(n >= 1 && n <= 2000, "compute_zeros: n budget is [1, 2000]");
  require(tol > 0.0, "compute_zeros: tol must be positive");
  const JacobiMatrix matrix = build_jacobi(family, n);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    const double r = gershgorin_radius(matrix, i);
    lo = std::min(lo, matrix.diag[static_cast<std::size_t>(i)] - r);
    hi = std::max(hi, matrix.diag[static_cast<std::size_t>(i)] + r);
  }
  const double scale = std::max({std::fabs(lo), std::fabs(hi), 1.0});
  const double eps = std::numeric_limits<double>::epsilon();
  const double target = std::max(tol * scale, 8.0 * eps * scale);

  std::vector<double> ascending(static_cast<std::size_t>(n));
  double width = 0.0;
  for (int j = 0; j < n; ++j) {
    double a = lo;
    double b = hi;
    while (b - a > target) {
      const double mid = a + 0.5 * (b - a);
      if (mid <= a || mid >= b) break;
      if (sturm_count(matrix, mid) <= j) {
        a = mid;
      } else {
        b = mid;
      }
    }
    ascending[static_cast<std::size_t>(j)] = a + 0.5 * (b - a);
    width = std::max(width, b - a);
  }

  ZeroSet result;
  result.zeros.assign(ascending.rbegin(), ascending.rend());
  result.enclosure_width = width;
  return result;
}

ChainBound chain_bound(const FamilySpec& family, int n) {
  require(n >= 1, "chain_bound: n must be >= 1");
  ChainBound bound;
  bound.roots_x.reserve(static_cast<std::size_t>(n));
  bound.roots_y.reserve(static_cast<std::size_t>(n));
  bound.B = -std::numeric_limits<double>::infinity();
  bound.A = -bound.B;
  double prev_alpha = monic_alpha(family, 0);
  for (long long k = 1; k <= n; ++k) {
    const auto [alpha, beta] = monic_coeffs(family, k);
    const double sum = 0.5 * (alpha + prev_alpha);
    const double diff = alpha - prev_alpha;
    const double half = 0.5 * std::sqrt(diff * diff + 16.0 * beta);
    const double x = sum + half;
    // y = sum - half in a cancellation-free product form.
    const double y = (alpha * prev_alpha - 4.0 * beta) / x;
    bound.roots_x.push_back(x);
    bound.roots_y.push_back(y);
    bound.B = std::max(bound.B, x);
    bound.A = std::min(bound.A, y);
    prev_alpha = alpha;
  }
  return bound;
}

double closed_form_bound(const FamilySpec& family, int n) {
  require(n >= 1, "closed_form_bound: n must be >= 1");
  const double dn = n;
  switch (family.kind) {
    case FamilyKind::ChenIsmail:
      return 8.0 * dn * dn * std::sqrt(1.0 - 1.0 / (4.0 * dn * dn));
    case FamilyKind::BergValent:
      return 1024.0 * dn * dn * dn * dn - 1024.0 * dn * dn * dn +
             2240.0 * dn * dn;
    default:
      return 108.0 * dn * dn * dn + 108.0 * family.c * dn * dn;
  }
}

double predict_extreme_zero(const FamilySpec& family, int n, int k) {
  require(n >= 1, "predict_extreme_zero: n must be >= 1");
  require(k >= 1 && k <= 10, "predict_extreme_zero: k must be in [1, 10]");
  return edge_abscissa(family, airy_zero(k), n);
}

bool hethcote_verify(const FamilySpec& family, int n, int k, double radius) {
  if (!(radius > 0.0)) return false;
  const double center = predict_extreme_zero(family, n, k);
  const int sign_lo = native_value(family, n, center - radius).sign;
  const int sign_hi = native_value(family, n, center + radius).sign;
  return sign_lo * sign_hi < 0;
}

double limiting_cdf(const FamilySpec& family, double x) {
  // The cumulative integral of each density is reduced to a single
  // quadrature by exchanging the order of integration; the inner integral
  // in the spectral variable is an arcsine in closed form.
  if (family.kind == FamilyKind::ChenIsmail) {
    require(x >= -1.0 && x <= 1.0, "limiting_cdf: x outside [-1, 1]");
    if (x < 0.0) return 1.0 - limiting_cdf(family, -x);
    if (x >= 1.0) return 1.0;
    const double r = std::sqrt(x);
    const double tail = integrate(
        [x](double s) { return std::asin(std::min(1.0, x / (s * s))); }, r,
        1.0, 1e-10);
    return 0.5 + 0.5 * r + tail / kPi;
  }
  require(x >= 0.0 && x <= 1.0, "limiting_cdf: x outside [0, 1]");
  if (x >= 1.0) return 1.0;
  const int p = (family.kind == FamilyKind::BergValent) ? 4 : 3;
  const double r = std::pow(x, 1.0 / p);
  const double tail = integrate(
      [x, p](double s) {
        return std::asin(std::min(1.0, std::sqrt(x / std::pow(s, p))));
      },
      r, 1.0, 1e-10);
  return r + 2.0 * tail / kPi;
}

double ks_distance(const FamilySpec& family, int n) {
  require(n >= 1 && n <= 500, "ks_distance: n budget is [1, 500]");
  const ZeroSet set = compute_zeros(family, n, 1e-13);
  const StandardFormData form = standard_form(family);
  const double scale = form.t_plus * std::pow(form.nu(n), form.theta);
  const double support_lo =
      (family.kind == FamilyKind::ChenIsmail) ? -1.0 : 0.0;
  double distance = 0.0;
  for (int i = 1; i <= n; ++i) {
    // set.zeros is descending; walk it backwards for the ascending order
    // statistic u_(i).
    const double u = std::clamp(
        set.zeros[static_cast<std::size_t>(n - i)] / scale, support_lo, 1.0);
    const double model = limiting_cdf(family, u);
    const double empirical = (static_cast<double>(i) - 0.5) / n;
    distance = std::max(distance, std::fabs(model - empirical));
  }
  return distance;
}

}  // namespace indpoly
