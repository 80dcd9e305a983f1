// Tests for the asymptotic approximants: exponential-region forms against
// the exact recurrence, cross-checks between the general formula and its
// birth-death specializations, and oscillatory/Airy/Bessel/edge accuracy
// against recurrence truth.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "indpoly/asympt.hpp"
#include "indpoly/exact.hpp"
#include "indpoly/families.hpp"
#include "indpoly/phase.hpp"
#include "indpoly/quad.hpp"
#include "indpoly/specfun.hpp"

using namespace indpoly;

namespace {

const FamilySpec kCI = FamilySpec::chen_ismail();
const FamilySpec kBV = FamilySpec::berg_valent();
const FamilySpec kCF1 = FamilySpec::conrad_flajolet_1(1.0);
const FamilySpec kCF2 = FamilySpec::conrad_flajolet_2(1.0);

// Exact rational -> scaled, via a 256-bit intermediate.
ScaledReal scaled_from_mpq(const mpq_class& q) {
  if (q == 0) return ScaledReal{};
  mpf_class f(q, 256);
  long e2 = 0;
  double d = mpf_get_d_2exp(&e2, f.get_mpf_t());  // |d| in [0.5, 1)
  ScaledReal out = ScaledReal::from_double(d);
  out.exponent2 += e2;
  return out;
}

// |a/b - 1|.
double rel_to(const ScaledReal& a, const ScaledReal& b) {
  return std::abs(ratio_to_double(a, b) - 1.0);
}

// Native value by the scaled forward recurrence (truth for n beyond the
// exact evaluator's cap).
ScaledReal native(const FamilySpec& f, int n, double x) {
  return native_value(f, n, x);
}

// Rescaled abscissa x = nu^theta * t.
double abscissa(const FamilySpec& f, double t, int n) {
  const StandardFormData d = standard_form(f);
  return std::pow(d.nu(n), d.theta) * t;
}

OuterParams lemma_params(const FamilySpec& f) {
  return outer_params_from_rates(rate_expansion(f));
}

}  // namespace

TEST_CASE("rate expansions match the recurrence rates") {
  const RateExpansion bv = rate_expansion(kBV);
  CHECK(bv.b == 256.0);
  CHECK(bv.u == 2.0);
  CHECK(bv.v == 0.0);
  CHECK(bv.p == 4);
  CHECK(bv.sigma == 0.25);

  const RateExpansion c1 = rate_expansion(kCF1);
  CHECK(c1.b == 27.0);
  CHECK(c1.u == doctest::Approx(1.0 + 5.0 / 3.0).epsilon(1e-15));
  CHECK(c1.v == doctest::Approx(1.0 + 1.0 / 3.0).epsilon(1e-15));
  CHECK(c1.p == 3);
  CHECK(c1.sigma == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  const RateExpansion c2 = rate_expansion(kCF2);
  CHECK(c2.u == doctest::Approx(1.0 + 4.0 / 3.0).epsilon(1e-15));
  CHECK(c2.v == doctest::Approx(1.0 - 1.0 / 3.0).epsilon(1e-15));
  CHECK(c2.sigma == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(rate_expansion(kCI), std::domain_error);

  // The expansion reproduces the actual rates to O(n^{p-2}).
  for (const FamilySpec& f : {kBV, kCF1, kCF2}) {
    const RateExpansion re = rate_expansion(f);
    const double n = 1000.0;
    const double lam = birth_rate(f, 1000);
    const double mu = death_rate(f, 1000);
    const double base = re.b * std::pow(n, re.p);
    CHECK(std::abs(lam / base - 1.0 - re.u / n) < 5.0 / (n * n));
    CHECK(std::abs(mu / base - 1.0 - re.v / n) < 5.0 / (n * n));
  }

  const OuterParams op = lemma_params(kBV);
  CHECK(op.a == 512.0);
  CHECK(op.alpha == 512.0);
  CHECK(op.b == 256.0);
  CHECK(op.beta == -131072.0);
  CHECK(op.p == 4);
  CHECK(op.sigma == 0.25);
}

TEST_CASE("general formula specializes to the birth-death closed form") {
  // The two code paths share no quadrature: the general form integrates the
  // five factors, the closed form integrates only the exponent term.
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const std::vector<FamilySpec> fams = {kBV, kCF1, kCF2,
                                        FamilySpec::conrad_flajolet_2(1.5)};
  for (int trial = 0; trial < 10; ++trial) {
    const FamilySpec& f = fams[trial % fams.size()];
    const double tp = standard_form(f).t_plus;
    const bool negative = (trial % 2 == 1);
    const double t = negative ? -tp * (0.1 + 3.0 * uni(rng))
                              : tp * (1.1 + 3.0 * uni(rng));
    const int n = 5 + static_cast<int>(40.0 * uni(rng));
    const ApproximantResult gen = approx_outer_general(lemma_params(f), t, n);
    const ApproximantResult bd = approx_outer_birth_death(f, t, n);
    CAPTURE(f.name());
    CAPTURE(t);
    CAPTURE(n);
    CHECK(rel_to(gen.value, bd.value) < 1e-9);
  }
  // A fixed deep-negative and a near-edge point per family.
  for (const FamilySpec& f : {kBV, kCF1, kCF2}) {
    const double tp = standard_form(f).t_plus;
    for (double t : {1.3 * tp, 6.0 * tp, -0.7 * tp, -4.0 * tp}) {
      const ApproximantResult gen =
          approx_outer_general(lemma_params(f), t, 30);
      const ApproximantResult bd = approx_outer_birth_death(f, t, 30);
      CAPTURE(f.name());
      CAPTURE(t);
      CHECK(rel_to(gen.value, bd.value) < 1e-9);
    }
  }
}

TEST_CASE("general formula matches the exact recurrence (quartic family)") {
  // For the quartic-weight family the monic recurrence has a_n = 0 and
  // b_n = 16 n^4 - 4 n^2, i.e. lemma data a = alpha = beta = 0, b = 4, p = 2,
  // sigma = 1/2; the family's outer normalization x = 8 nu^2 y maps to the
  // lemma variable 8y.
  const OuterParams ci{0.0, 0.0, 4.0, 0.0, 2, 0.5};

  // n = 30, family y = 3 (lemma y = 24): x = 30.5^2 * 24 = 22326 exactly.
  const ApproximantResult gen = approx_outer_general(ci, 24.0, 30);
  const ApproximantResult nat = approx_outer_chen_ismail(3.0, 30);
  CHECK(rel_to(gen.value, nat.value) < 1e-8);
  const ExactEvaluation ex = evaluate_exact(kCI, 30, mpq_class(22326));
  CHECK(rel_to(gen.value, scaled_from_mpq(ex.pi_n)) < 0.02);
  CHECK(rel_to(nat.value, scaled_from_mpq(ex.native)) < 0.02);

  // Same cross-check at family y = 2 (lemma y = 16), x = 14884.
  CHECK(rel_to(approx_outer_general(ci, 16.0, 30).value,
               approx_outer_chen_ismail(2.0, 30).value) < 1e-8);
  CHECK(rel_to(approx_outer_chen_ismail(2.0, 30).value,
               scaled_from_mpq(evaluate_exact(kCI, 30, mpq_class(14884)).native)) <
        0.02);

  // Negative axis, even and odd degree: F_n(-x) = (-1)^n F_n(x).
  const ApproximantResult neg_even = approx_outer_chen_ismail(-3.0, 30);
  CHECK(rel_to(neg_even.value,
               scaled_from_mpq(evaluate_exact(kCI, 30, mpq_class(-22326)).native)) <
        0.02);
  const double x31 = 31.5 * 31.5 * 24.0;  // 23814
  const ApproximantResult neg_odd = approx_outer_chen_ismail(-3.0, 31);
  const ScaledReal want_odd =
      scaled_from_mpq(evaluate_exact(kCI, 31, mpq_class(-x31)).native);
  CHECK(neg_odd.value.sign == want_odd.sign);
  CHECK(rel_to(neg_odd.value, want_odd) < 0.02);
  CHECK(rel_to(approx_outer_general(ci, -24.0, 31).value, want_odd) < 0.02);

  CHECK(gen.formula_id == "key-lemma");
  CHECK(!gen.family.has_value());
  CHECK(nat.formula_id == "fn-outside");
  REQUIRE(nat.family.has_value());
  CHECK(nat.family->kind == FamilyKind::ChenIsmail);
}

TEST_CASE("birth-death outer approximants match the exact recurrence") {
  struct Case {
    FamilySpec f;
    double t;
    int n;
  };
  const std::vector<Case> cases = {
      {kBV, 2048.0, 30},  {kBV, -500.0, 31},  {kCF1, 150.0, 30},
      {kCF1, -150.0, 31}, {kCF2, 150.0, 30},  {kCF2, -200.0, 25},
      {FamilySpec::conrad_flajolet_1(2.0), -400.0, 40},
  };
  for (const Case& c : cases) {
    const double x = abscissa(c.f, c.t, c.n);
    const ExactEvaluation ex = evaluate_exact(c.f, c.n, mpq_class(x));
    CAPTURE(c.f.name());
    CAPTURE(c.t);
    CAPTURE(c.n);

    // Monic form against the exact monic value.
    const ApproximantResult bd = approx_outer_birth_death(c.f, c.t, c.n);
    const ScaledReal want_pi = scaled_from_mpq(ex.pi_n);
    CHECK(bd.value.sign == want_pi.sign);
    CHECK(rel_to(bd.value, want_pi) < 0.05);

    // Normalized form against the exact native value: Q_n = (-1)^n K_n p_n.
    const ApproximantResult st = approx_outer_standard(c.f, c.t, c.n);
    const double par = (c.n % 2 == 1) ? -1.0 : 1.0;
    const ScaledReal got_native =
        st.value * normalization_K(c.f, c.n) * par;
    const ScaledReal want_native = scaled_from_mpq(ex.native);
    CHECK(got_native.sign == want_native.sign);
    CHECK(rel_to(got_native, want_native) < 0.05);

    CHECK(bd.formula_id == "pi-outer-general");
    CHECK(st.formula_id == "pi-outer-general");
    CHECK(bd.regime == Region::OuterExponential);
  }
}

TEST_CASE("outer domain errors") {
  CHECK_THROWS_AS(approx_outer_birth_death(kCI, 20.0, 10), std::domain_error);
  CHECK_THROWS_AS(approx_outer_birth_death(kBV, 512.0, 10), std::domain_error);
  CHECK_THROWS_AS(approx_outer_birth_death(kBV, 0.0, 10), std::domain_error);
  CHECK_THROWS_AS(approx_outer_standard(kCF1, 54.0, 10), std::domain_error);
  CHECK_THROWS_AS(approx_outer_chen_ismail(0.5, 10), std::domain_error);
  CHECK_THROWS_AS(approx_outer_chen_ismail(-1.0, 10), std::domain_error);
  OuterParams bad = lemma_params(kBV);
  CHECK_THROWS_AS(approx_outer_general(bad, 500.0, 10), std::domain_error);
  CHECK_THROWS_AS(approx_outer_general(bad, 0.0, 10), std::domain_error);
  bad.b = -1.0;
  CHECK_THROWS_AS(approx_outer_general(bad, 5000.0, 10), std::domain_error);
  OuterParams badp = lemma_params(kBV);
  badp.p = 0;
  CHECK_THROWS_AS(approx_outer_general(badp, 5000.0, 10), std::domain_error);
}

TEST_CASE("oscillatory approximants track the native polynomial") {
  struct Case {
    FamilySpec f;
    double t;
    int n;
    double tol;
  };
  const std::vector<Case> cases = {
      {kCI, 4.0, 100, 0.05},   {kCI, 5.5, 101, 0.05},
      {kBV, 256.0, 100, 0.05}, {kBV, 640.0, 80, 0.05},
      {kCF1, 54.0, 100, 0.05}, {kCF2, 54.0, 100, 0.05},
      // At t = 30 the phase puts n = 90 almost exactly on a cosine node,
      // where pointwise relative error is unbounded; n = 92 is node-free.
      {kCF1, 30.0, 92, 0.05},
  };
  for (const Case& c : cases) {
    const double x = abscissa(c.f, c.t, c.n);
    const ApproximantResult osc = approx_oscillatory(c.f, c.t, c.n);
    const ScaledReal want = native(c.f, c.n, x);
    CAPTURE(c.f.name());
    CAPTURE(c.t);
    CAPTURE(c.n);
    CHECK(rel_to(osc.value, want) < c.tol);
    CHECK(osc.regime == Region::Oscillatory);
  }

  // Quartic-family parity: the formula continues to t < 0 through (-1)^n.
  for (int n : {100, 101}) {
    const double x = abscissa(kCI, 4.0, n);
    const ApproximantResult osc = approx_oscillatory(kCI, -4.0, n);
    const ScaledReal want = native(kCI, n, -x);
    CHECK(osc.value.sign == want.sign);
    CHECK(rel_to(osc.value, want) < 0.05);
  }

  // Window enforcement.
  CHECK_THROWS_AS(approx_oscillatory(kBV, 1023.0, 100), std::domain_error);
  CHECK_THROWS_AS(approx_oscillatory(kBV, 5.0, 100), std::domain_error);
  CHECK_THROWS_AS(approx_oscillatory(kCI, 0.5, 50), std::domain_error);
  CHECK_THROWS_AS(approx_oscillatory(kCI, 7.99, 50), std::domain_error);
  CHECK_NOTHROW(approx_oscillatory(kCI, 1.0, 50, 0.05));
  CHECK_THROWS_AS(approx_oscillatory(kCI, 1.0, 50, 0.9), std::domain_error);
}

TEST_CASE("airy approximants track the native polynomial at the soft edge") {
  for (const FamilySpec& f : {kCI, kBV, kCF1, kCF2}) {
    const double tp = standard_form(f).t_plus;
    for (int n : {50, 60}) {
      for (double t : {tp, 0.97 * tp, 1.03 * tp}) {
        const double x = abscissa(f, t, n);
        const ApproximantResult ar = approx_airy(f, t, n);
        const ScaledReal want = native(f, n, x);
        CAPTURE(f.name());
        CAPTURE(t);
        CAPTURE(n);
        CHECK(rel_to(ar.value, want) < 0.10);
        CHECK(ar.regime == Region::UpperTurning);
      }
    }
  }
  CHECK_THROWS_AS(approx_airy(kBV, 0.0, 10), std::domain_error);
  CHECK_THROWS_AS(approx_airy(kCI, -4.0, 10), std::domain_error);
}

TEST_CASE("airy error contracts as the degree grows") {
  for (const FamilySpec& f : {kCI, kBV, kCF1, kCF2}) {
    const double tp = standard_form(f).t_plus;
    auto err = [&](int n) {
      const double x = abscissa(f, tp, n);
      return rel_to(approx_airy(f, tp, n).value, native(f, n, x));
    };
    const double e25 = err(25);
    const double e100 = err(100);
    CAPTURE(f.name());
    CAPTURE(e25);
    CAPTURE(e100);
    // Leading-order error decays like nu^{-2/3}: quadrupling n should cut it
    // to ~0.4x; allow headroom.
    CHECK(e100 < 0.6 * e25);
    CHECK(e100 < 0.02);
  }
}

TEST_CASE("airy approximant carries no growing second solution") {
  // Deep in the exponential region the Airy factor is exponentially small;
  // any admixture of the second Airy solution would blow the ratio up with n.
  for (const FamilySpec& f : {kCI, kBV, kCF1, kCF2}) {
    const double tp = standard_form(f).t_plus;
    auto err = [&](double t, int n) {
      const double x = abscissa(f, t, n);
      return rel_to(approx_airy(f, t, n).value, native(f, n, x));
    };
    CAPTURE(f.name());
    const double e10 = err(1.5 * tp, 10);
    const double e40 = err(1.5 * tp, 40);
    const double e100 = err(1.5 * tp, 100);
    CAPTURE(e10);
    CAPTURE(e40);
    CAPTURE(e100);
    CHECK(e40 < e10);
    CHECK(e100 < e40);
    CHECK(e100 < 0.04);
    // Farther out the scaled-Airy series path must stay accurate too.
    CHECK(err(3.0 * tp, 50) < 0.10);
  }
}

TEST_CASE("oscillatory and airy approximants agree in the overlap") {
  // theta ~ 0.95 keeps the oscillatory phase large while the uniform formula
  // is still on its home turf.
  const double theta = 0.95;
  for (const FamilySpec& f : {kCI, kBV, kCF1, kCF2}) {
    const double tp = standard_form(f).t_plus;
    const double t = (f.kind == FamilyKind::ChenIsmail)
                         ? tp * std::cos(theta)
                         : tp * std::cos(theta) * std::cos(theta);
    const int n = 100;
    const double x = abscissa(f, t, n);
    const ScaledReal want = native(f, n, x);
    const ApproximantResult osc = approx_oscillatory(f, t, n);
    const ApproximantResult ary = approx_airy(f, t, n);
    CAPTURE(f.name());
    CAPTURE(t);
    CHECK(rel_to(osc.value, want) < 0.12);
    CHECK(rel_to(ary.value, want) < 0.12);
    CHECK(rel_to(osc.value, ary.value) < 0.15);
  }
}

TEST_CASE("bessel approximants track the native polynomial at the hard edge") {
  struct Case {
    FamilySpec f;
    double t;
    int n;
  };
  const std::vector<Case> cases = {
      {kBV, 100.0, 60}, {kBV, 30.0, 80},  {kCF1, 10.0, 60},
      {kCF2, 10.0, 60}, {kCF1, 25.0, 80},
  };
  for (const Case& c : cases) {
    const double x = abscissa(c.f, c.t, c.n);
    const ApproximantResult bs = approx_bessel(c.f, c.t, c.n);
    const ScaledReal want = native(c.f, c.n, x);
    CAPTURE(c.f.name());
    CAPTURE(c.t);
    CAPTURE(c.n);
    CHECK(rel_to(bs.value, want) < 0.10);
    CHECK(bs.regime == Region::LowerTurning);
  }

  CHECK_THROWS_AS(approx_bessel(kCI, 4.0, 50), std::domain_error);
  CHECK_THROWS_AS(approx_bessel(kBV, 0.0, 50), std::domain_error);
  CHECK_THROWS_AS(approx_bessel(kBV, -5.0, 50), std::domain_error);
  CHECK_THROWS_AS(approx_bessel(kBV, 600.0, 50), std::domain_error);
  CHECK_THROWS_AS(approx_bessel(kBV, 60.0, 50, 50.0), std::domain_error);
  CHECK_THROWS_AS(approx_bessel(kBV, 60.0, 50, 1024.0), std::domain_error);
  CHECK_NOTHROW(approx_bessel(kBV, 60.0, 50, 100.0));
}

TEST_CASE("edge approximants match weighted native values") {
  for (const FamilySpec& f : {kCI, kBV, kCF1, kCF2}) {
    for (double s : {0.0, 1.0, -1.0}) {
      const int n = 50;
      const double x = edge_abscissa(f, s, n);
      const ApproximantResult ed = approx_edge(f, s, n);
      const ScaledReal want = edge_weight(f, x) * native(f, n, x);
      CAPTURE(f.name());
      CAPTURE(s);
      CHECK(rel_to(ed.value, want) < 0.10);
      CHECK(ed.regime == Region::UpperTurning);
    }
  }
  // At the first Airy zero the approximant vanishes to library precision.
  const double a1 = -airy_zero(1);
  for (const FamilySpec& f : {kCI, kBV, kCF1, kCF2}) {
    const ScaledReal at_zero = approx_edge(f, -a1, 40).value;
    const ScaledReal at_mid = approx_edge(f, 0.0, 40).value;
    CHECK(std::abs(ratio_to_double(at_zero, at_mid)) < 1e-12);
  }
  CHECK_THROWS_AS(approx_edge(kCI, 3.5, 40), std::domain_error);
  CHECK_NOTHROW(approx_edge(kCI, 3.5, 40, 4.0));

  // Abscissa anchors: s = 0 is the rescaled spectrum edge.
  CHECK(edge_abscissa(kCI, 0.0, 10) == doctest::Approx(8.0 * 10.5 * 10.5));
  CHECK(edge_abscissa(kBV, 0.0, 10) ==
        doctest::Approx(1024.0 * std::pow(10.25, 4)));
  CHECK(edge_abscissa(kCF1, 0.0, 10) ==
        doctest::Approx(108.0 * std::pow(10.0 + 2.0 / 3.0, 3)));
  CHECK(edge_abscissa(kCI, 1.0, 10) >
        edge_abscissa(kCI, 0.0, 10));
}

TEST_CASE("orthonormal edge approximants match weighted orthonormal values") {
  CHECK(orthonormal_edge_nu_exponent(kCI) == doctest::Approx(-5.0 / 6.0));
  CHECK(orthonormal_edge_nu_exponent(kBV) == doctest::Approx(-11.0 / 6.0));
  CHECK(orthonormal_edge_nu_exponent(kCF1) == doctest::Approx(-4.0 / 3.0));
  CHECK(orthonormal_edge_nu_exponent(kCF2) == doctest::Approx(-4.0 / 3.0));

  for (const FamilySpec& f : {kCI, kBV, kCF1, kCF2}) {
    const int n = 50;
    const double x = edge_abscissa(f, 0.0, n);
    const RecurrenceTrace tr = evaluate_standard(f, n, x);
    const ScaledReal want = edge_weight(f, x) * tr.phat[n];
    const ApproximantResult oe = orthonormal_edge(f, 0.0, n);
    CAPTURE(f.name());
    CHECK(oe.value.sign == want.sign);
    CHECK(rel_to(oe.value, want) < 0.10);
  }
}

TEST_CASE("outer exponent integral agrees with its elliptic closed form") {
  // int_0^1 ds/sqrt(1 - w^4 s^4) = F(arcsin w | -1)/w for 0 < w < 1, the
  // identity behind the quartic-rate exponential factors.
  for (double ratio : {0.5, 0.25}) {
    const double w = std::pow(ratio, 0.25);
    const double quad = integrate(
        [&](double s) {
          return 1.0 / std::sqrt(1.0 - ratio * std::pow(s, 4));
        },
        0.0, 1.0, 1e-13);
    const double closed = elliptic_f(std::asin(w), -1.0) / w;
    CHECK(std::abs(quad - closed) < 1e-10 * closed);
  }
}

TEST_CASE("approximant metadata is populated") {
  const ApproximantResult a = approx_airy(kCI, 8.0, 10);
  CHECK(a.formula_id == "fn-main-for");
  CHECK(a.n == 10);
  CHECK(a.t_or_y_or_s == 8.0);
  REQUIRE(a.family.has_value());
  CHECK(a.family->kind == FamilyKind::ChenIsmail);

  CHECK(approx_airy(kBV, 1024.0, 10).formula_id == "BV-mainfor1");
  CHECK(approx_airy(kCF1, 108.0, 10).formula_id == "M1-mainfor1");
  CHECK(approx_airy(kCF2, 108.0, 10).formula_id == "M2-mainfor1");
  CHECK(approx_oscillatory(kCI, 4.0, 20).formula_id == "fn-inside");
  CHECK(approx_oscillatory(kBV, 256.0, 20).formula_id == "BV-pn-asy");
  CHECK(approx_oscillatory(kCF1, 54.0, 20).formula_id == "M1-pn-asy");
  CHECK(approx_oscillatory(kCF2, 54.0, 20).formula_id == "M2-pn-asy");
  CHECK(approx_bessel(kBV, 100.0, 20).formula_id == "BV-Bessel-formula");
  CHECK(approx_bessel(kCF1, 10.0, 20).formula_id == "M1-Bessel");
  CHECK(approx_bessel(kCF2, 10.0, 20).formula_id == "M2-Bessel");
  CHECK(approx_edge(kCI, 0.0, 20).formula_id == "fn-airy");
  CHECK(approx_edge(kBV, 0.0, 20).formula_id == "bv-airy");
  CHECK(approx_edge(kCF1, 0.0, 20).formula_id == "M1-airy");
  CHECK(approx_edge(kCF2, 0.0, 20).formula_id == "M2-airy");
  CHECK(orthonormal_edge(kCF2, 0.0, 20).formula_id == "M2-airy");
  CHECK(approx_bessel(kBV, 100.0, 20).t_or_y_or_s == 100.0);
  CHECK(approx_edge(kBV, 0.5, 20).t_or_y_or_s == 0.5);
}
