// Tanh-sinh quadrature on finite intervals.  Handles integrable endpoint
// singularities; integrands may receive stable distances to each endpoint.
#pragma once

#include <functional>

namespace indpoly {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels = 0;
};

// f(x, da, db): integrand at x with da = x - a and db = b - x computed
// without cancellation (essential for singular endpoint factors).
QuadResult tanh_sinh(const std::function<double(double, double, double)>& f,
                     double a, double b, double rel_tol = 1e-12);

// Convenience overload for integrands that only need x.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12);

}  // namespace indpoly
