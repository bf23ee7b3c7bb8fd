#include "helpers.hpp"

#include <mzvkit/numerics.hpp>

#include <boost/multiprecision/mpfr.hpp>

using namespace mzvkit;
using namespace mzvkit::test;

TEST_SUITE("hp_numerics") {

TEST_CASE("context validation") {
  PrecisionContext ctx;
  CHECK_NOTHROW(ctx.validate());
  ctx.decimal_digits = 19;
  CHECK_THROWS_AS(ctx.validate(), std::invalid_argument);
  ctx.decimal_digits = 30;
  ctx.target_tolerance = 1e-25;
  CHECK_THROWS_AS(ctx.validate(), std::invalid_argument);
  ctx.target_tolerance = 1e-20;
  CHECK_NOTHROW(ctx.validate());
}

TEST_CASE("guards nest and restore") {
  const int before = current_digits();
  {
    PrecisionGuard outer(60);
    CHECK(current_digits() >= 60);
    {
      PrecisionGuard inner(30);
      CHECK(current_digits() < 60);
    }
    CHECK(current_digits() >= 60);
  }
  CHECK(current_digits() == before);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(7, 3), 0) == 1);
  CHECK(pochhammer(Rational(1), 5) == 120);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  PrecisionGuard g(ctx40());
  CHECK(gap(pochhammer(Real(1) / 2, 3), Real(15) / 8) < 1e-38);
}

TEST_CASE("log_gamma") {
  PrecisionGuard g(ctx40());
  CHECK(gap(log_gamma(Real(1)), Real(0)) < 1e-38);
  CHECK(gap(log_gamma(Real(2)), Real(0)) < 1e-38);
  CHECK(gap(log_gamma(Real(1) / 2), log(sqrt(ref(pi)))) < 1e-38);
  // Legendre duplication at x = 3/4.
  const Real x = Real(3) / 4;
  const Real dup = log_gamma(x).value + log_gamma(x + Real(1) / 2).value;
  const Real rhs = (1 - 2 * x) * log(Real(2)) + log(sqrt(ref(pi))) + log_gamma(2 * x).value;
  CHECK(gap(dup, rhs) < 1e-37);
}

TEST_CASE("digamma") {
  PrecisionGuard g(ctx40());
  CHECK(gap(digamma(Real(1)), -ref(euler_gamma)) < 1e-38);
  CHECK(gap(digamma(Real(1) / 2), -ref(euler_gamma) - 2 * ref(ln2)) < 1e-38);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (int k = 1; k <= 50; ++k) CHECK(bernoulli(2 * k + 1) == 0);
}

TEST_CASE("binomial edge cases") {
  CHECK(binomial(-1, 0) == 1);
  for (int i = 1; i <= 6; ++i) CHECK(binomial(i - 1, i) == 0);
  for (int s = 1; s <= 3; ++s) CHECK(binomial(2 * s - 1, -1) == 0);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(-3, 2) == 6);
}

TEST_CASE("even zeta values") {
  CHECK(zeta_even_exact(1).coefficient == Rational(1, 6));
  CHECK(zeta_even_exact(2).coefficient == Rational(1, 90));
  CHECK(zeta_even_exact(3).coefficient == Rational(1, 945));
  CHECK(zeta_even_exact(3).pi_power == 6);
  PrecisionGuard g(ctx40());
  const Real p = ref(pi);
  CHECK(gap(hurwitz_zeta(Real(2), Real(1)), p * p / 6) < 1e-38);
  CHECK(gap(hurwitz_zeta(Real(4), Real(1)), pow(p, 4) / 90) < 1e-38);
  for (int s : {2, 4, 6, 8}) {
    const Real exact = to_real(zeta_even_exact(s / 2).coefficient) * pow(p, s);
    CHECK(gap(hurwitz_zeta(Real(s), Real(1)), exact) < 1e-12);
  }
}

TEST_CASE("odd zeta values against reference digits") {
  PrecisionGuard g(ctx40());
  CHECK(gap(zeta_value(3), ref(zeta3)) < 1e-38);
  CHECK(gap(zeta_value(5), ref(zeta5)) < 1e-38);
  // hurwitz_zeta(s, 1/2) = (2^s - 1) zeta(s)
  CHECK(gap(hurwitz_zeta(Real(3), Real(1) / 2), 7 * ref(zeta3)) < 1e-37);
}

TEST_CASE("acceleration") {
  const PrecisionContext ctx = ctx40();
  PrecisionGuard g(ctx);
  SUBCASE("cvz on log 2") {
    std::vector<Real> a;
    for (int m = 0; m < 30; ++m) a.push_back(Real(m % 2 ? -1 : 1) / (m + 1));
    const BigReal v = accelerate(a, AccelerationScheme::alternating_cvz, ctx);
    CHECK(gap(v, ref(ln2)) < 1e-12);
    CHECK(v.err < 1e-12);
  }
  SUBCASE("levin-u on zeta(2)") {
    std::vector<Real> partial;
    Real acc = 0;
    for (int m = 1; m <= 40; ++m) {
      acc += Real(1) / (Real(m) * m);
      partial.push_back(acc);
    }
    const BigReal v = accelerate(partial, AccelerationScheme::levin_u, ctx);
    CHECK(gap(v, ref(pi) * ref(pi) / 6) < 1e-10);
  }
  SUBCASE("constant sequences") {
    const std::vector<Real> c(12, Real(7) / 3);
    CHECK(gap(accelerate(c, AccelerationScheme::richardson, ctx), Real(7) / 3) < 1e-38);
    CHECK(gap(accelerate(c, AccelerationScheme::levin_u, ctx), Real(7) / 3) < 1e-38);
  }
  SUBCASE("eta(k) for k = 2..8") {
    for (int k = 2; k <= 8; ++k) {
      std::vector<Real> a;
      for (int m = 1; m <= 60; ++m) a.push_back((m % 2 ? 1 : -1) * pow(Real(m), -k));
      const BigReal v = accelerate(a, AccelerationScheme::alternating_cvz, ctx);
      const Real expected = (1 - pow(Real(2), 1 - k)) * zeta_value(k).value;
      CHECK(gap(v, expected) < 1e-12);
    }
  }
  SUBCASE("too few terms") {
    const std::vector<Real> few(3, Real(1));
    CHECK_THROWS(accelerate(few, AccelerationScheme::levin_u, ctx));
  }
}

TEST_CASE("big real error propagation") {
  PrecisionGuard g(ctx40());
  const BigReal x{Real(2), Real("1e-30")};
  const BigReal y{Real(3), Real("2e-30")};
  CHECK((x + y).err >= Real("3e-30"));
  CHECK((x * y).err >= Real("7e-30"));
  CHECK(scale(x, Rational(-5)).err >= Real("5e-30"));
  CHECK(scale(x, Rational(-5)).value == -10);
}

}  // TEST_SUITE
