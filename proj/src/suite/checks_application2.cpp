#include <mzvkit/detail/checks.hpp>

namespace mzvkit::detail {

namespace {

Rational two_pow(int e) {
  return e >= 0 ? Rational(Integer(1) << e) : Rational(Integer(1), Integer(1) << -e);
}

// sum_{i<=k} 2^(k-i) C(i+r, i) sum_{k_1+..+k_s=k-i} zeta-star(i+k_1+r+2, {k_j+2}_{j>=2})
BigReal general15_lhs(int k, int r, int s, const PrecisionContext& ctx) {
  BigReal acc;
  for (int i = 0; i <= k; ++i) {
    const Rational c = two_pow(k - i) * binomial(i + r, i);
    for (const auto& comp : compositions(k - i, s)) {
      std::vector<int> idx;
      idx.push_back(i + comp.parts[0] + r + 2);
      for (int j = 1; j < s; ++j) idx.push_back(comp.parts[j] + 2);
      acc += scale(zeta_star(idx, ctx), c);
    }
  }
  return acc;
}

BigReal eq15_rhs(int k, int s, const PrecisionContext& ctx) {
  const Rational c = two_pow(1 + k) * binomial(k + s - 1, k) * (1 - two_pow(1 - k - 2 * s));
  return scale(mpl({k + 2 * s}, true, 1, ctx), c);
}

Evaluation eq15(const Params& p, const PrecisionContext& ctx) {
  const int k = static_cast<int>(param_int(p, "k"));
  const int s = static_cast<int>(param_int(p, "s"));
  return {approx(general15_lhs(k, 0, s, ctx)), approx(eq15_rhs(k, s, ctx)), 1e-9};
}

Evaluation eq15_k0_k1(const Params& p, const PrecisionContext& ctx) {
  const int k = static_cast<int>(param_int(p, "k"));
  const int s = static_cast<int>(param_int(p, "s"));
  const BigReal lhs = general15_lhs(k, 0, s, ctx);
  BigReal rhs;
  if (k == 0) {
    rhs = scale(mpl({2 * s}, true, 1, ctx), 2 * (1 - two_pow(1 - 2 * s)));
  } else {
    rhs = scale(mpl({2 * s + 1}, true, 1, ctx), 4 * s * (1 - two_pow(-2 * s)));
  }
  return {approx(lhs), approx(rhs), 1e-9};
}

Evaluation general15(const Params& p, const PrecisionContext& ctx) {
  const int k = static_cast<int>(param_int(p, "k"));
  const int r = static_cast<int>(param_int(p, "r"));
  const int s = static_cast<int>(param_int(p, "s"));
  BigReal rhs;
  for (int i = 0; i <= r; ++i) {
    for (const auto& kk : compositions(k, i + 2)) {
      for (const auto& rr : compositions(r + 1, i + 1, 1)) {
        const auto& kp = kk.parts;
        const auto& rp = rr.parts;
        Rational c = two_pow(i + 1 + kp[i + 1]) * binomial(kp[i + 1] + s - 1, kp[i + 1]) *
                     binomial(kp[i] + rp[i] - 2, kp[i]);
        for (int j = 0; j < i; ++j) c *= binomial(kp[j] + rp[j] - 1, kp[j]);
        if (c == 0) continue;
        std::vector<int> idx;
        for (int j = 0; j < i; ++j) idx.push_back(kp[j] + rp[j]);
        idx.push_back(kp[i] + kp[i + 1] + rp[i] + 2 * s - 1);
        rhs += scale(mpl(idx, true, -1, ctx), c);
      }
    }
  }
  return {approx(general15_lhs(k, r, s, ctx)), approx(rhs), 1e-8};
}

Evaluation eq19(const Params& p, const PrecisionContext& ctx) {
  const int s = static_cast<int>(param_int(p, "s"));
  const BigReal lhs = zeta_star(repeated(2, s), ctx);
  return {approx(lhs), approx(scale(mpl({2 * s}, true, 1, ctx), 2 * (1 - two_pow(1 - 2 * s)))),
          1e-9};
}

Evaluation eq17(const Params& p, const PrecisionContext&) {
  const int s = static_cast<int>(param_int(p, "s"));
  const auto v = parse_theorem3_variant(param_choice(p, "coefficient"));
  Evaluation e{exact(theorem3_coefficient(s, v)),
               exact(theorem3_coefficient(s, Theorem3Variant::proof_chain)), 0.0};
  e.reported = true;
  return e;
}

Evaluation eq22_vs_eq17(const Params& p, const PrecisionContext&) {
  const int s = static_cast<int>(param_int(p, "s"));
  return {exact(theorem3_coefficient(s, Theorem3Variant::eq22)),
          exact(theorem3_coefficient(s, Theorem3Variant::eq17)), 0.0};
}

Evaluation bernoulli_id(const Params& p, const PrecisionContext&) {
  const int s = static_cast<int>(param_int(p, "s"));
  return {exact(bernoulli_identity_check(s)), exact(Rational(0)), 0.0};
}

// sum_{k1+k2+k3=s-2} (2 + delta_{0 k1}) zeta-star({2}^k1, 3, {2}^k2, 3, {2}^k3)
BigReal two_threes(int s, const PrecisionContext& ctx) {
  BigReal acc;
  if (s < 2) return acc;
  for (const auto& comp : compositions(s - 2, 3)) {
    const int k1 = comp.parts[0];
    const int k2 = comp.parts[1];
    const int k3 = comp.parts[2];
    const auto idx = repeated(2, k1, repeated(3, 1, repeated(2, k2, repeated(3, 1, repeated(2, k3)))));
    acc += scale(zeta_star(idx, ctx), Rational(k1 == 0 ? 3 : 2));
  }
  return acc;
}

// sum_{i=1}^{s} zeta-star({2}^(i-1), t, {2}^(s-i))
BigReal inserted_sum(int s, int t, const PrecisionContext& ctx) {
  BigReal acc;
  for (int i = 1; i <= s; ++i) acc += zeta_star(repeated(2, i - 1, repeated(t, 1, repeated(2, s - i))), ctx);
  return acc;
}

// Exact pi^(2s+2) coefficients of the middle forms: zeta(0) = -1/2.
Rational even_zeta_coefficient(int n) {
  if (n == 0) return Rational(-1, 2);
  return zeta_even_exact(n).coefficient;
}

Evaluation eq21_pairs(int s) {
  // 2 sum_i (1 - 2^(1-2j)) zeta(2(i+2)) zeta(2j), j = s-1-i
  Rational lhs(0);
  for (int i = 0; i <= s - 1; ++i) {
    const int j = s - 1 - i;
    lhs += 2 * (1 - two_pow(1 - 2 * j)) * even_zeta_coefficient(i + 2) * even_zeta_coefficient(j);
  }
  // -X/2 zeta-star({2}^(s+1)) with zeta-star({2}^n) = 2 (1 - 2^(1-2n)) zeta(2n)
  const int n = s + 1;
  const Rational rhs = -theorem3_bernoulli_sum(s) / 2 * 2 * (1 - two_pow(1 - 2 * n)) *
                       even_zeta_coefficient(n);
  return {exact(lhs), exact(rhs), 0.0};
}

Evaluation eq21_check(const Params& p, const PrecisionContext& ctx) {
  const int s = static_cast<int>(param_int(p, "s"));
  if (param_choice(p, "form") == "zeta_pairs") return eq21_pairs(s);
  return eval_eq21(s, ctx);
}

}  // namespace

Evaluation eval_eq16(int s, Theorem3Variant v, const PrecisionContext& ctx) {
  const BigReal lhs = zeta_star(repeated(4, 1, repeated(2, s - 1)), ctx);
  const BigReal rhs = scale(zeta_star(repeated(2, s + 1), ctx), theorem3_coefficient(s, v)) -
                      scale(two_threes(s, ctx), Rational(2, 3));
  Evaluation e{approx(lhs), approx(rhs), 1e-9};
  e.reported = v != Theorem3Variant::proof_chain;
  return e;
}

Evaluation eval_eq18(int s, const PrecisionContext& ctx) {
  const BigReal lhs = scale(zeta_star(repeated(4, 1, repeated(2, s - 1)), ctx), Rational(3)) +
                      scale(inserted_sum(s, 4, ctx), Rational(4)) +
                      scale(two_threes(s, ctx), Rational(2));
  const Rational c = Rational(4 * s * (s + 1)) * (1 - two_pow(-1 - 2 * s));
  return {approx(lhs), approx(scale(mpl({2 + 2 * s}, true, 1, ctx), c)), 1e-9};
}

Evaluation eval_eq20(int s, const PrecisionContext& ctx) {
  const Rational c = Rational(4 * s * (s + 1)) * (1 - two_pow(-1 - 2 * s));
  return {approx(scale(mpl({2 * s + 2}, true, 1, ctx), c)),
          approx(scale(zeta_star(repeated(2, s + 1), ctx), Rational(2 * s * (s + 1)))), 1e-9};
}

Evaluation eval_eq21(int s, const PrecisionContext& ctx) {
  const Rational c = -theorem3_bernoulli_sum(s) / 2;
  return {approx(inserted_sum(s, 4, ctx)), approx(scale(zeta_star(repeated(2, s + 1), ctx), c)),
          1e-9};
}

Evaluation eval_eq21_telescope(int s, int t, const PrecisionContext& ctx) {
  BigReal lhs;
  for (int i = 0; i <= s - 1; ++i) {
    const BigReal z = mpl({2 * i + t}, true, 1, ctx);
    lhs += s - 1 - i == 0 ? z : z * zeta_star(repeated(2, s - 1 - i), ctx);
  }
  return {approx(lhs), approx(inserted_sum(s, t, ctx)), 1e-9};
}

void register_application2(std::vector<CheckSpec>& out) {
  using PS = ParamSpec;
  const std::vector<std::string> variants = {"proof_chain", "eq17", "eq22"};
  out.push_back({"eq15", "weighted zeta-star sums with a raised first entry vs a single zeta value",
                 {PS::integer("k", 0, 6), PS::integer("s", 1, 4)},
                 grid({{"k", int_range(0, 4)}, {"s", int_range(1, 3)}}),
                 eq15});
  out.push_back({"eq15_k0_k1", "the k = 0 and k = 1 cases: zeta-star({2}^s) and zeta(2s+1)",
                 {PS::integer("k", 0, 1), PS::integer("s", 1, 6)},
                 grid({{"k", int_range(0, 1)}, {"s", int_range(1, 6)}}),
                 eq15_k0_k1});
  out.push_back({"general15", "two-parameter form against alternating zeta values",
                 {PS::integer("k", 0, 3), PS::integer("r", 0, 3), PS::integer("s", 1, 3)},
                 grid({{"k", int_range(0, 2)}, {"r", int_range(0, 2)}, {"s", int_range(1, 2)}}),
                 general15});
  out.push_back({"eq16", "zeta-star(4, {2}^(s-1)) in the {2,3}-basis under each coefficient",
                 {PS::integer("s", 1, 5), PS::choice("coefficient", variants)},
                 grid({{"s", int_range(1, 5)}, {"coefficient", choices(variants)}}),
                 [](const Params& p, const PrecisionContext& ctx) {
                   return eval_eq16(static_cast<int>(param_int(p, "s")),
                                    parse_theorem3_variant(param_choice(p, "coefficient")), ctx);
                 }});
  out.push_back({"eq17", "closed-form coefficient vs the coefficient produced by the derivation",
                 {PS::integer("s", 1, 30), PS::choice("coefficient", {"eq17", "eq22"})},
                 grid({{"s", int_range(1, 5)}, {"coefficient", choices({"eq17", "eq22"})}}),
                 eq17});
  out.push_back({"eq18", "weighted sum identity behind the {2,3}-basis expression",
                 {PS::integer("s", 1, 5)},
                 grid({{"s", int_range(1, 5)}}),
                 [](const Params& p, const PrecisionContext& ctx) {
                   return eval_eq18(static_cast<int>(param_int(p, "s")), ctx);
                 }});
  out.push_back({"eq19", "zeta-star({2}^s) = 2 (1 - 2^(1-2s)) zeta(2s)",
                 {PS::integer("s", 1, 8)},
                 grid({{"s", int_range(1, 6)}}),
                 eq19});
  out.push_back({"eq20", "even zeta value rewritten as zeta-star({2}^(s+1))",
                 {PS::integer("s", 1, 6)},
                 grid({{"s", int_range(1, 5)}}),
                 [](const Params& p, const PrecisionContext& ctx) {
                   return eval_eq20(static_cast<int>(param_int(p, "s")), ctx);
                 }});
  out.push_back({"eq21", "inserted-4 sum in Bernoulli form; exact even-zeta middle form",
                 {PS::integer("s", 1, 6), PS::choice("form", {"bernoulli", "zeta_pairs"})},
                 grid({{"s", int_range(1, 5)}, {"form", choices({"bernoulli", "zeta_pairs"})}}),
                 eq21_check});
  out.push_back({"eq21_telescope", "sum_i zeta(2i+t) zeta-star({2}^(s-1-i)) as inserted sums",
                 {PS::integer("s", 1, 5), PS::integer("t", 2, 6)},
                 grid({{"s", int_range(1, 4)}, {"t", int_range(2, 5)}}),
                 [](const Params& p, const PrecisionContext& ctx) {
                   return eval_eq21_telescope(static_cast<int>(param_int(p, "s")),
                                              static_cast<int>(param_int(p, "t")), ctx);
                 }});
  out.push_back({"eq22_vs_eq17", "the two closed forms of the coefficient agree, exact",
                 {PS::integer("s", 1, 60)},
                 grid({{"s", int_range(1, 30)}}),
                 eq22_vs_eq17});
  out.push_back({"bernoulli_id", "Bernoulli-number identity linking the closed forms, exact",
                 {PS::integer("s", 1, 60)},
                 grid({{"s", int_range(1, 30)}}),
                 bernoulli_id});
}

}  // namespace mzvkit::detail
