#include "indpoly/exact.hpp"

#include <stdexcept>

namespace indpoly {

namespace {

mpq_class exact_birth(const FamilySpec& family, long long n,
                      const mpq_class& c) {
  mpq_class m(static_cast<long>(n));
  switch (family.kind) {
    case FamilyKind::BergValent:
      return (4 * m + 1) * (4 * m + 2) * (4 * m + 2) * (4 * m + 3);
    case FamilyKind::ConradFlajoletI:
      return (3 * m + c + 1) * (3 * m + c + 2) * (3 * m + c + 2);
    case FamilyKind::ConradFlajoletII:
      return (3 * m + c + 1) * (3 * m + c + 1) * (3 * m + c + 2);
    default:
      throw std::domain_error("exact_birth: not a birth-death family");
  }
}

mpq_class exact_death(const FamilySpec& family, long long n,
                      const mpq_class& c) {
  mpq_class m(static_cast<long>(n));
  switch (family.kind) {
    case FamilyKind::BergValent:
      return (4 * m - 1) * (4 * m) * (4 * m) * (4 * m + 1);
    case FamilyKind::ConradFlajoletI:
      return (3 * m + c) * (3 * m + c) * (3 * m + c + 1);
    case FamilyKind::ConradFlajoletII:
      return (3 * m + c - 1) * (3 * m + c) * (3 * m + c);
    default:
      throw std::domain_error("exact_death: not a birth-death family");
  }
}

}  // namespace

ExactEvaluation evaluate_exact(const FamilySpec& family, int n,
                               const mpq_class& x) {
  if (n < 0 || n > 40) {
    throw std::domain_error("evaluate_exact: n must be in [0, 40]");
  }
  mpq_class c(family.c);
  c.canonicalize();

  // Monic recurrence pi_{k+1} = (x - alpha_k) pi_k - beta_k pi_{k-1}.
  mpq_class prev(1), cur(1);
  if (n >= 1) {
    mpq_class alpha0;
    if (family.is_birth_death()) {
      alpha0 = exact_birth(family, 0, c) + exact_death(family, 0, c);
    }
    cur = x - alpha0;
    for (int k = 1; k < n; ++k) {
      mpq_class alpha, beta;
      if (family.is_birth_death()) {
        alpha = exact_birth(family, k, c) + exact_death(family, k, c);
        beta = exact_birth(family, k - 1, c) * exact_death(family, k, c);
      } else {
        mpq_class kk(static_cast<long>(k));
        mpq_class n2 = 4 * kk * kk;
        beta = n2 * (n2 - 1);
      }
      mpq_class next = (x - alpha) * cur - beta * prev;
      prev = cur;
      cur = next;
    }
  }

  ExactEvaluation out;
  out.pi_n = cur;
  if (family.is_birth_death()) {
    mpq_class lam_prod(1);
    for (int k = 0; k < n; ++k) lam_prod *= exact_birth(family, k, c);
    out.native = cur / lam_prod;
    if (n % 2 != 0) out.native = -out.native;
  } else {
    out.native = cur;
  }
  return out;
}

}  // namespace indpoly
