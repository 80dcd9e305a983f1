// Exact rational-arithmetic oracle for the recurrences (small n only).
#pragma once

#include <gmpxx.h>

#include "indpoly/families.hpp"

namespace indpoly {

struct ExactEvaluation {
  mpq_class pi_n;    // monic polynomial value
  mpq_class native;  // Q_n(x) for birth-death families, F_n(x) for ChenIsmail
};

// Evaluates the monic recurrence exactly. n is capped at 40 (cost guard).
// For the Conrad-Flajolet families, c is taken as the exact rational value
// of the stored double.
ExactEvaluation evaluate_exact(const FamilySpec& family, int n,
                               const mpq_class& x);

}  // namespace indpoly
