#include <mzvkit/detail/checks.hpp>

#include <functional>
#include <random>

namespace mzvkit::detail {

TheoremAParams lemma1_pack(const Rational& alpha, int s) {
  TheoremAParams p;
  p.s = s;
  p.a = 2 * alpha;
  p.b.assign(static_cast<std::size_t>(s) + 1, alpha);
  p.c.assign(static_cast<std::size_t>(s) + 1, alpha);
  return p;
}

TheoremAParams theorem2_pack(const Rational& alpha, int s) {
  TheoremAParams p;
  p.s = s;
  p.a = alpha + 1;
  p.b.assign(static_cast<std::size_t>(s) + 1, alpha);
  p.c.assign(static_cast<std::size_t>(s) + 1, Rational(1));
  p.b[0] = 1;
  return p;
}

Rational lemma1_scale(const Rational& alpha, int s) {
  Rational den(1);
  for (int i = 0; i < 2 * s + 1; ++i) den *= alpha;
  return 2 * (2 * alpha - 1) / den;
}

Rational theorem2_scale(const Rational& alpha, int s) {
  Rational den(1);
  for (int i = 0; i < s + 1; ++i) den *= alpha;
  return (alpha + 1) / den;
}

TheoremAParams random_pack(int seed, int s) {
  std::mt19937 gen(static_cast<std::mt19937::result_type>(7919 * seed + s));
  // Multiples of 1/20 in [lo, hi].
  auto draw = [&](int lo, int hi) { return Rational(lo + static_cast<int>(gen() % (hi - lo + 1)), 20); };
  const Rational half(1, 2);
  for (;;) {
    TheoremAParams p;
    p.s = s;
    p.a = draw(20, 80);
    for (int i = 0; i <= s; ++i) {
      p.b.push_back(draw(4, 30));
      p.c.push_back(draw(4, 30));
    }
    const auto cond = check_theorem_a_conditions(p);
    if (cond.c1_margin < half || cond.c2_margin < half || !cond.poles) continue;
    bool ok = true;
    for (int i = 0; i <= s; ++i) {
      if (1 + p.a - p.b[i] - p.c[i] < half) ok = false;
    }
    if (ok) return p;
  }
}

namespace {

// --- exact Bernoulli checks --------------------------------------------------

Evaluation bernoulli_recurrence(const Params& p, const PrecisionContext&) {
  const long n = param_int(p, "n");
  Rational sum(0);
  for (long j = 0; j <= n; ++j) sum += binomial(n + 1, j) * bernoulli(static_cast<int>(j));
  return {exact(sum), exact(Rational(0)), 0.0};
}

Evaluation bernoulli_odd(const Params& p, const PrecisionContext&) {
  const long k = param_int(p, "k");
  return {exact(bernoulli(static_cast<int>(2 * k + 1))), exact(Rational(0)), 0.0};
}

Evaluation euler_formula(const Params& p, const PrecisionContext& ctx) {
  const long s = param_int(p, "s");
  PrecisionGuard guard(ctx);
  const BigReal lhs = hurwitz_zeta(Real(2 * s), Real(1));
  const auto e = zeta_even_exact(static_cast<int>(s));
  const BigReal rhs(to_real(e.coefficient) * pow(pi_constant(), e.pi_power));
  return {approx(lhs), approx(rhs), 1e-12};
}

// --- definitions: harmonic product at depth one --------------------------------

Evaluation stuffle(const Params& p, const PrecisionContext& ctx) {
  const int a = static_cast<int>(param_int(p, "a"));
  const int b = static_cast<int>(param_int(p, "b"));
  const bool star = param_choice(p, "variant") == "star";
  const BigReal za = mpl({a}, true, 1, ctx);
  const BigReal zb = mpl({b}, true, 1, ctx);
  const BigReal zab = mpl({a + b}, true, 1, ctx);
  if (star) {
    return {approx(mpl({a, b}, false, 1, ctx) + mpl({b, a}, false, 1, ctx)), approx(za * zb + zab),
            1e-10};
  }
  return {approx(za * zb), approx(mpl({a, b}, true, 1, ctx) + mpl({b, a}, true, 1, ctx) + zab),
          1e-10};
}

// --- duality ------------------------------------------------------------------

std::vector<int> parse_parts(const std::string& text) {
  return parse_index("z(" + text + ")").parts;
}

Evaluation duality23(const Params& p, const PrecisionContext& ctx) {
  const HurwitzIndex h{parse_parts(param_choice(p, "index")), param_rational(p, "alpha")};
  const auto lhs = eval_hurwitz_mzv(h, Side::lhs, ctx);
  const auto rhs = eval_hurwitz_mzv(h, Side::rhs, ctx);
  return {approx(lhs.value), approx(rhs.value), 1e-10};
}

Evaluation duality_ones(const Params& p, const PrecisionContext& ctx) {
  const int l = static_cast<int>(param_int(p, "l"));
  const int k = static_cast<int>(param_int(p, "k"));
  const auto left = repeated(1, l, {k + 2});
  const auto right = repeated(1, k, {l + 2});
  if (dual_index(make_index(left)).parts != right) {
    throw DomainError("dual index disagrees with the ({1}^l, k+2) rule");
  }
  return {approx(mpl(left, true, 1, ctx)), approx(mpl(right, true, 1, ctx)), 1e-10};
}

// --- Theorem A ----------------------------------------------------------------

Evaluation thm_a_random(const Params& p, const PrecisionContext& ctx) {
  const auto pack = random_pack(static_cast<int>(param_int(p, "seed")),
                                static_cast<int>(param_int(p, "s")));
  return {approx(eval_theorem_a_lhs(pack, ctx).value), approx(eval_theorem_a_rhs(pack, ctx).value),
          1e-8};
}

// The hypergeometric side of each proof family, rescaled to the displayed
// one-parameter identity, against that identity's other side.
Evaluation thm_a_special(const Params& p, const PrecisionContext& ctx) {
  const std::string family = param_choice(p, "family");
  const Rational alpha = param_rational(p, "alpha");
  ParamFamily fam = ParamFamily::lemma1;
  TheoremAParams pack;
  Rational kappa;
  int s = 1;
  if (family == "lemma1_s1" || family == "lemma1_s2") {
    s = family == "lemma1_s1" ? 1 : 2;
    pack = lemma1_pack(alpha, s);
    kappa = lemma1_scale(alpha, s);
  } else {
    fam = ParamFamily::theorem2;
    pack = theorem2_pack(alpha, s);
    kappa = theorem2_scale(alpha, s);
  }
  const BigReal lhs = scale(eval_theorem_a_lhs(pack, ctx).value, kappa);
  const BigReal rhs = eval_param_series(fam, alpha, s, Side::rhs, 0, ctx).value;
  return {approx(lhs), approx(rhs), 1e-8};
}

Evaluation param_series(const Params& p, const PrecisionContext& ctx) {
  const ParamFamily fam =
      param_choice(p, "family") == "lemma1" ? ParamFamily::lemma1 : ParamFamily::theorem2;
  const Rational alpha = param_rational(p, "alpha");
  const int s = static_cast<int>(param_int(p, "s"));
  const int r = static_cast<int>(param_int(p, "r"));
  return {approx(eval_param_series(fam, alpha, s, Side::lhs, r, ctx).value),
          approx(eval_param_series(fam, alpha, s, Side::rhs, r, ctx).value), 1e-9};
}

// --- Pochhammer derivatives (exact) ---------------------------------------------

// Coefficients of prod_j (c_j + t), truncated at degree `deg`.
std::vector<Rational> linear_product(const std::vector<Rational>& c, int deg) {
  std::vector<Rational> poly(static_cast<std::size_t>(deg) + 1, Rational(0));
  poly[0] = 1;
  for (const auto& cj : c) {
    for (int n = deg; n >= 0; --n) {
      poly[n] = poly[n] * cj + (n > 0 ? poly[n - 1] : Rational(0));
    }
  }
  return poly;
}

// Coefficients of prod_j 1/(c_j - t), truncated at degree `deg`.
std::vector<Rational> reciprocal_product(const std::vector<Rational>& c, int deg) {
  std::vector<Rational> poly(static_cast<std::size_t>(deg) + 1, Rational(0));
  poly[0] = 1;
  for (const auto& cj : c) {
    std::vector<Rational> next(poly.size(), Rational(0));
    for (int i = 0; i <= deg; ++i) {
      Rational term = 1 / cj;  // t^n / c^(n+1)
      for (int n = 0; i + n <= deg; ++n) {
        next[i + n] += poly[i] * term;
        term /= cj;
      }
    }
    poly = std::move(next);
  }
  return poly;
}

// sum over 0 <= m_1 < ... < m_r < m (or <= ... <= m) of prod 1/(m_i + w).
Rational nested_reciprocals(const Rational& w, int r, int m, bool strict) {
  std::function<Rational(int, int)> rec = [&](int left, int from) -> Rational {
    if (left == 0) return Rational(1);
    Rational acc(0);
    const int top = strict ? m - 1 : m;
    for (int j = from; j <= top; ++j) acc += rec(left - 1, strict ? j + 1 : j) / (w + j);
    return acc;
  };
  return rec(r, 0);
}

Evaluation pochhammer_deriv(const Params& p, const PrecisionContext&) {
  const bool rising = param_choice(p, "variant") == "rising";
  const Rational w = param_rational(p, "w");
  const int m = static_cast<int>(param_int(p, "m"));
  const int r = static_cast<int>(param_int(p, "r"));
  if (rising) {
    std::vector<Rational> c;
    for (int j = 0; j < m; ++j) c.push_back(w + j);
    const Rational lhs = linear_product(c, r)[r];
    const Rational rhs = pochhammer(w, m) * nested_reciprocals(w, r, m, true);
    return {exact(lhs), exact(rhs), 0.0};
  }
  std::vector<Rational> c;
  for (int j = 0; j <= m; ++j) c.push_back(w + j);
  const Rational lhs = reciprocal_product(c, r)[r];
  const Rational rhs = nested_reciprocals(w, r, m, false) / pochhammer(w, m + 1);
  return {exact(lhs), exact(rhs), 0.0};
}

std::vector<ParamValue> rationals(const std::vector<Rational>& qs) { return {qs.begin(), qs.end()}; }

}  // namespace

void register_foundations(std::vector<CheckSpec>& out) {
  using PS = ParamSpec;
  const auto alphas = rationals({Rational(3, 4), Rational(1), Rational(5, 4)});

  out.push_back({"bernoulli_recurrence", "sum_{j<=n} C(n+1,j) B_j = 0, exact",
                 {PS::integer("n", 1, 200)},
                 grid({{"n", int_range(1, 60)}}),
                 bernoulli_recurrence});
  out.push_back({"bernoulli_odd", "B_{2k+1} = 0 for k >= 1, exact",
                 {PS::integer("k", 1, 100)},
                 grid({{"k", int_range(1, 30)}}),
                 bernoulli_odd});
  out.push_back({"euler_formula", "zeta(2s) as a rational multiple of pi^(2s) vs Hurwitz zeta(2s, 1)",
                 {PS::integer("s", 1, 30)},
                 grid({{"s", int_range(1, 10)}}),
                 euler_formula});
  out.push_back({"stuffle", "harmonic product of two single zeta values, strict and star",
                 {PS::integer("a", 2, 8), PS::integer("b", 2, 8), PS::choice("variant", {"strict", "star"})},
                 grid({{"a", int_range(2, 4)}, {"b", int_range(2, 4)}, {"variant", choices({"strict", "star"})}}),
                 stuffle});
  out.push_back({"duality23", "Hurwitz multiple zeta duality, both sides summed independently",
                 {PS::rational("alpha", Rational(1, 4), Rational(4)),
                  PS::choice("index", {"2", "3", "1,2", "2,2", "1,3", "1,1,3", "1,1,4", "2,3"})},
                 grid({{"alpha", rationals({Rational(1, 2), Rational(1), Rational(3, 2)})},
                       {"index", choices({"2", "3", "1,2", "1,1,3", "1,1,4"})}}),
                 duality23});
  out.push_back({"duality_note2vi", "zeta({1}^l, k+2) = zeta({1}^k, l+2)",
                 {PS::integer("l", 0, 5), PS::integer("k", 0, 5)},
                 grid({{"l", int_range(0, 3)}, {"k", int_range(0, 3)}}),
                 duality_ones});
  out.push_back({"thmA_random", "hypergeometric side vs nested-sum side on random parameter packs",
                 {PS::integer("seed", 0, 999), PS::integer("s", 1, 2)},
                 grid({{"seed", int_range(0, 9)}, {"s", int_range(1, 2)}}),
                 thm_a_random});
  out.push_back({"thmA_special", "proof specializations: rescaled hypergeometric side vs closed side",
                 {PS::choice("family", {"lemma1_s1", "lemma1_s2", "theorem2_s1"}),
                  PS::rational("alpha", Rational(3, 5), Rational(3, 2))},
                 grid({{"family", choices({"lemma1_s1", "lemma1_s2", "theorem2_s1"})}, {"alpha", alphas}}),
                 thm_a_special});
  out.push_back({"param_series", "alpha-derivatives of both one-parameter identities",
                 {PS::choice("family", {"lemma1", "theorem2"}), PS::integer("s", 1, 4), PS::integer("r", 0, 5),
                  PS::rational("alpha", Rational(3, 5), Rational(3))},
                 grid({{"family", choices({"lemma1", "theorem2"})},
                       {"s", int_range(1, 3)},
                       {"r", int_range(0, 3)},
                       {"alpha", alphas}}),
                 param_series});
  out.push_back({"pochhammer_deriv", "Taylor coefficients of (w)_m and 1/(w)_{m+1} as nested sums, exact",
                 {PS::choice("variant", {"rising", "reciprocal"}), PS::rational("w", Rational(1, 10), Rational(5)),
                  PS::integer("m", 0, 8), PS::integer("r", 0, 6)},
                 grid({{"variant", choices({"rising", "reciprocal"})},
                       {"w", rationals({Rational(1), Rational(3, 2)})},
                       {"m", int_range(0, 5)},
                       {"r", int_range(0, 3)}}),
                 pochhammer_deriv});
}

}  // namespace mzvkit::detail
