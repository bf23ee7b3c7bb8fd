#include "helpers.hpp"

#include <mzvkit/detail/checks.hpp>
#include <mzvkit/zeta_poly.hpp>

using namespace mzvkit;
using namespace mzvkit::test;

namespace {

ZetaPolynomial random_poly(Gen& g) {
  ZetaPolynomial p;
  const int terms = g.uniform(0, 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> f = g.exponents(g.uniform(0, 2), 2, 5);
    p += ZetaPolynomial(ZetaMonomial(f), g.rational(-5, 5, 4));
  }
  return p;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("ring axioms on random polynomials") {
  Gen g(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(g), b = random_poly(g), c = random_poly(g);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * ZetaPolynomial(Rational(1)) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Gen g(99);
  const PrecisionContext ctx = ctx40();
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_poly(g), b = random_poly(g);
    const BigReal ab = zp_eval(a * b, ctx);
    const BigReal prod = zp_eval(a, ctx) * zp_eval(b, ctx);
    const BigReal sum = zp_eval(a + b, ctx);
    const BigReal parts = zp_eval(a, ctx) + zp_eval(b, ctx);
    PrecisionGuard guard(ctx);
    CHECK(gap(ab, prod) <= (10 * (ab.err + prod.err) + Real("1e-35")).convert_to<double>());
    CHECK(gap(sum, parts) <= (10 * (sum.err + parts.err) + Real("1e-35")).convert_to<double>());
  }
}

TEST_CASE("Euler reduction preserves the value") {
  Gen g(5);
  const PrecisionContext ctx = ctx40();
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_poly(g);
    const BigReal x = zp_eval(a, ctx);
    const BigReal y = zp_eval(euler_reduce(a), ctx);
    PrecisionGuard guard(ctx);
    CHECK(gap(x, y) < 1e-30);
  }
}

TEST_CASE("Bernoulli recurrence for random n") {
  Gen g(17);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = g.uniform(1, 80);
    Rational acc(0);
    for (int j = 0; j <= n; ++j) acc += binomial(n + 1, j) * bernoulli(j);
    CHECK(acc == 0);
  }
}

TEST_CASE("pochhammer step and log-gamma functional equation") {
  Gen g(31);
  const PrecisionContext ctx = ctx40();
  PrecisionGuard guard(ctx);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational a = g.rational(-20, 40, 7);
    const int m = g.uniform(0, 12);
    CHECK(pochhammer(a, m + 1) == pochhammer(a, m) * (a + m));
    const Real x = to_real(g.rational(1, 100, 10));
    const Real lhs = exp(log_gamma(x + 1).value);
    const Real rhs = x * exp(log_gamma(x).value);
    CHECK(gap(lhs, rhs) / rhs.convert_to<double>() < 1e-12);
  }
}

TEST_CASE("stuffle on random depth-one pairs") {
  Gen g(3);
  const PrecisionContext ctx = ctx40();
  for (int trial = 0; trial < 12; ++trial) {
    const int a = g.uniform(2, 6), b = g.uniform(2, 6);
    const BigReal za = detail::mpl({a}, true, 1, ctx), zb = detail::mpl({b}, true, 1, ctx);
    const BigReal lhs = za * zb;
    const BigReal strict = detail::mpl({a, b}, true, 1, ctx) + detail::mpl({b, a}, true, 1, ctx) +
                           detail::mpl({a + b}, true, 1, ctx);
    const BigReal star = detail::zeta_star({a, b}, ctx) + detail::zeta_star({b, a}, ctx) -
                         detail::mpl({a + b}, true, 1, ctx);
    PrecisionGuard guard(ctx);
    CHECK(gap(lhs, strict) < 1e-10);
    CHECK(gap(lhs, star) < 1e-10);
  }
}

TEST_CASE("star values expand into strict ones at depth two") {
  Gen g(8);
  const PrecisionContext ctx = ctx40();
  for (int trial = 0; trial < 12; ++trial) {
    const int a = g.uniform(1, 4), b = g.uniform(2, 4);
    for (int sign : {1, -1}) {
      const BigReal star = detail::mpl({a, b}, false, sign, ctx);
      const BigReal split = detail::mpl({a, b}, true, sign, ctx) + detail::mpl({a + b}, true, sign, ctx);
      PrecisionGuard guard(ctx);
      CHECK(gap(star, split) < 1e-10);
    }
  }
}

TEST_CASE("duality on random admissible indices") {
  Gen g(41);
  const PrecisionContext ctx = ctx40();
  for (int trial = 0; trial < 10; ++trial) {
    const auto parts = g.admissible(g.uniform(2, 6));
    const MultiIndex k = make_index(parts);
    const MultiIndex d = dual_index(k);
    const BigReal x = eval_mpl(k, ctx).value;
    const BigReal y = eval_mpl(d, ctx).value;
    PrecisionGuard guard(ctx);
    CHECK_MESSAGE(gap(x, y) < 1e-10, k.to_string());
  }
}

TEST_CASE("Hurwitz duality on random shifts") {
  Gen g(77);
  const PrecisionContext ctx = ctx40();
  for (int trial = 0; trial < 6; ++trial) {
    HurwitzIndex h{g.admissible(g.uniform(2, 4)), g.rational(1, 8, 4)};
    const BigReal l = eval_hurwitz_mzv(h, Side::lhs, ctx).value;
    const BigReal r = eval_hurwitz_mzv(h, Side::rhs, ctx).value;
    PrecisionGuard guard(ctx);
    CHECK(gap(l, r) < 1e-10);
  }
}

TEST_CASE("symmetric star sums at depth three match summed orbits") {
  Gen g(13);
  const PrecisionContext ctx = ctx40();
  for (int trial = 0; trial < 5; ++trial) {
    const auto e = g.exponents(3, 2, 4);
    const BigReal sym = zp_eval(hoffman_symmetric_reduce(e, SymmetricVariant::star), ctx);
    BigReal orbit;
    for (const auto& arr : multiset_permutations(e)) {
      orbit += scale(detail::zeta_star(arr.items, ctx), Rational(arr.multiplicity));
    }
    PrecisionGuard guard(ctx);
    CHECK(gap(sym, orbit) < 1e-10);
  }
}

}  // TEST_SUITE
