#include <mzvkit/detail/checks.hpp>

namespace mzvkit::detail {

namespace {

BigReal zeta_minus(const std::vector<int>& parts, bool star, const PrecisionContext& ctx) {
  return mpl(parts, !star, -1, ctx);
}

BigReal sign_power(int e) { return BigReal(Real(e % 2 == 0 ? 1 : -1)); }

// ---------------------------------------------------------------------------
// Closed forms with Li_k(1/2)
// ---------------------------------------------------------------------------

Evaluation eq05(const Params& p, const PrecisionContext& ctx) {
  const int m = static_cast<int>(param_int(p, "m"));
  const BigReal lhs = zeta_minus(repeated(1, m, {2}), false, ctx);
  PrecisionGuard guard(ctx);
  const BigReal L(log2_constant());
  const BigReal sm = sign_power(m);
  auto inv_fact = [](int n) { return Rational(Integer(1), factorial(n)); };
  BigReal rhs = sm * zeta_value(m + 2) + sm * scale(pow(L, m + 2), 2 * inv_fact(m + 2));
  BigReal sum;
  for (int k = 0; k <= m + 2; ++k) {
    sum += polylog_half(k, ctx) * scale(pow(L, m + 2 - k), inv_fact(m + 2 - k));
  }
  rhs -= sm * sum;
  return {approx(lhs), approx(rhs), 1e-10};
}

Evaluation eq06(const Params&, const PrecisionContext& ctx) {
  const BigReal lhs = zeta_minus({1, 3}, false, ctx);
  PrecisionGuard guard(ctx);
  const BigReal L(log2_constant());
  BigReal rhs = scale(polylog_half(4, ctx), Rational(-2));
  rhs -= scale(pow(L, 4), Rational(1, 12));
  rhs += scale(zeta_value(4), Rational(15, 8));
  rhs -= scale(zeta_value(3) * L, Rational(7, 4));
  rhs += scale(zeta_value(2) * pow(L, 2), Rational(1, 2));
  return {approx(lhs), approx(rhs), 1e-10};
}

// ---------------------------------------------------------------------------
// Alternating sums with leading ones
// ---------------------------------------------------------------------------

// sum over compositions of `total` into `parts` of weight(comp) * zeta-star(comp + 2)
BigReal weighted_star_sum(int total, int parts, bool product_weight, bool first_weight,
                          const PrecisionContext& ctx) {
  BigReal acc;
  for (const auto& comp : compositions(total, parts)) {
    Rational w(1);
    std::vector<int> idx;
    for (int ri : comp.parts) {
      if (product_weight) w *= ri + 1;
      idx.push_back(ri + 2);
    }
    if (first_weight) w *= comp.parts.front() + 1;
    acc += scale(zeta_star(idx, ctx), w);
  }
  return acc;
}

BigReal sum3_lhs(int r, int s, bool star, const PrecisionContext& ctx) {
  BigReal acc;
  for (int i = 0; i <= r; ++i) {
    Rational c = binomial(s - 2 + i, i) + binomial(s - 1 + i, i);
    if (!star && (r - i) % 2 == 1) c = -c;
    if (c == 0) continue;
    acc += scale(zeta_minus(repeated(1, r - i, {2 * s + i}), star, ctx), c);
  }
  return acc;
}

BigReal sum4_lhs(int r, int s, const PrecisionContext& ctx) {
  BigReal acc;
  for (int i = 0; i <= r; ++i) {
    Rational c = binomial(2 * s + i - 1, i) - binomial(2 * s + i - 1, i - 1);
    c *= Rational(Integer(1) << (r - i + 1));
    if ((r - i) % 2 == 1) c = -c;
    if (c == 0) continue;
    acc += scale(zeta_minus(repeated(1, r - i, {2 * s + i}), false, ctx), c);
  }
  return acc;
}

Evaluation eq07(const Params& p, const PrecisionContext& ctx) {
  const int r = static_cast<int>(param_int(p, "r"));
  const int s = static_cast<int>(param_int(p, "s"));
  return {approx(sum3_lhs(r, s, false, ctx)), approx(weighted_star_sum(r, s, false, false, ctx)),
          1e-9};
}

Evaluation eq08(const Params& p, const PrecisionContext& ctx) {
  const int r = static_cast<int>(param_int(p, "r"));
  const int s = static_cast<int>(param_int(p, "s"));
  const auto gamma = gamma_ratio_coeffs(r);
  BigReal rhs;
  for (int i = 0; i <= r; ++i) {
    if (gamma.coeffs[i].is_zero()) continue;
    BigReal g = zp_eval(gamma.coeffs[i], ctx);
    if (i % 2 == 1) g = -g;
    rhs += g * weighted_star_sum(r - i, s, true, false, ctx);
  }
  return {approx(sum4_lhs(r, s, ctx)), approx(rhs), 1e-9};
}

Evaluation eq12(const Params& p, const PrecisionContext& ctx) {
  const int r = static_cast<int>(param_int(p, "r"));
  const int s = static_cast<int>(param_int(p, "s"));
  return {approx(sum3_lhs(r, s, true, ctx)), approx(weighted_star_sum(r, s, false, true, ctx)),
          1e-9};
}

Evaluation remark3i(const Params& p, const PrecisionContext& ctx) {
  const int r = static_cast<int>(param_int(p, "r"));
  const int s = static_cast<int>(param_int(p, "s"));
  BigReal rhs;
  for (const auto& comp : compositions(r, s)) {
    std::vector<int> idx;
    for (int ri : comp.parts) {
      idx.insert(idx.end(), static_cast<std::size_t>(ri), 1);
      idx.push_back(2);
    }
    rhs += zeta_star(idx, ctx);
  }
  return {approx(sum3_lhs(r, s, true, ctx)), approx(rhs), 1e-9};
}

Evaluation eq13(const Params& p, const PrecisionContext& ctx) {
  const int r = static_cast<int>(param_int(p, "r"));
  BigReal lhs;
  for (int i = 0; i <= r; ++i) {
    Rational c(i == 0 ? 2 : 1);
    if ((r - i) % 2 == 1) c = -c;
    lhs += scale(zeta_minus(repeated(1, r - i, {2 + i}), false, ctx), c);
  }
  return {approx(lhs), approx(mpl({r + 2}, true, 1, ctx)), 1e-10};
}

Evaluation eq14(const Params& p, const PrecisionContext& ctx) {
  const int r = static_cast<int>(param_int(p, "r"));
  BigReal lhs;
  for (int i = 0; i <= r; ++i) {
    lhs += scale(zeta_minus(repeated(1, r - i, {2 + i}), true, ctx), Rational(i == 0 ? 2 : 1));
  }
  return {approx(lhs), approx(scale(mpl({r + 2}, true, 1, ctx), Rational(r + 1))), 1e-10};
}

// ---------------------------------------------------------------------------
// Symbolic reductions
// ---------------------------------------------------------------------------

Evaluation eq09(const Params& p, const PrecisionContext& ctx) {
  const int r = static_cast<int>(param_int(p, "r"));
  const int k = static_cast<int>(param_int(p, "k"));
  const int q = static_cast<int>(param_int(p, "q"));
  const int s = static_cast<int>(param_int(p, "s"));
  const bool product = param_choice(p, "weight") == "product_r_plus_1";
  BigReal lhs;
  for (const auto& comp : compositions(r, k)) {
    Rational f(1);
    std::vector<int> idx;
    for (int ri : comp.parts) {
      if (product) f *= ri + 1;
      idx.push_back(q * ri + s);
    }
    lhs += scale(zeta_star(idx, ctx), f);
  }
  const auto poly = lemma2_reduce(r, k, q, s, product ? Lemma2Weight::product_r_plus_1 : Lemma2Weight::one);
  return {approx(lhs), approx(zp_eval(poly, ctx)), 1e-10};
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto next = text.find(',', pos);
    out.push_back(std::stoi(text.substr(pos, next - pos)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

Evaluation eq10(const Params& p, const PrecisionContext& ctx) {
  const auto exps = parse_list(param_choice(p, "exponents"));
  const bool star = param_choice(p, "variant") == "star";
  BigReal lhs;
  for (const auto& arr : multiset_permutations(exps)) {
    lhs += scale(mpl(arr.items, !star, 1, ctx), Rational(arr.multiplicity));
  }
  const auto poly =
      hoffman_symmetric_reduce(exps, star ? SymmetricVariant::star : SymmetricVariant::strict);
  return {approx(lhs), approx(zp_eval(poly, ctx)), 1e-10};
}

// Taylor coefficients at 1 of Gamma(x)^2/Gamma(2x-1) from a polynomial
// interpolating 2n+1 equispaced samples of width h.
std::vector<Real> gamma_ratio_taylor(int n, const Real& h) {
  const int count = 2 * n + 1;
  std::vector<Real> x(static_cast<std::size_t>(count));
  std::vector<Real> dd(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    x[j] = j - n;
    const Real a = 1 + x[j] * h;
    dd[j] = exp(2 * log_gamma(a).value - log_gamma(2 * a - 1).value);
  }
  for (int level = 1; level < count; ++level) {
    for (int j = count - 1; j >= level; --j) dd[j] = (dd[j] - dd[j - 1]) / (x[j] - x[j - level]);
  }
  // Newton form to monomial coefficients, innermost first.
  std::vector<Real> c(static_cast<std::size_t>(count), Real(0));
  for (int j = count - 1; j >= 0; --j) {
    for (int i = count - 1; i >= 1; --i) c[i] = c[i - 1] - x[j] * c[i];
    c[0] = dd[j] - x[j] * c[0];
  }
  Real hp(1);
  for (auto& v : c) {
    v /= hp;
    hp *= h;
  }
  return c;
}

Evaluation eq11(const Params& p, const PrecisionContext& ctx) {
  const int i = static_cast<int>(param_int(p, "i"));
  const BigReal lhs = zp_eval(gamma_ratio_coeffs(i).coeffs[i], ctx);
  PrecisionContext wide = ctx;
  wide.decimal_digits += 40;
  PrecisionGuard guard(wide);
  const auto t1 = gamma_ratio_taylor(9, Real(1) / 256);
  const auto t2 = gamma_ratio_taylor(9, Real(1) / 512);
  const BigReal rhs(t2[i], abs(t2[i] - t1[i]));
  return {approx(lhs), approx(rhs), 1e-10};
}

Evaluation theorem1_check(const Params& p, const PrecisionContext& ctx, Theorem1Sum which) {
  return eval_theorem1(static_cast<int>(param_int(p, "r")), static_cast<int>(param_int(p, "s")),
                       which, ctx);
}

}  // namespace

Evaluation eval_theorem1(int r, int s, Theorem1Sum which, const PrecisionContext& ctx) {
  if (which == Theorem1Sum::sum3) {
    const auto poly = lemma2_reduce(r, s, 1, 2, Lemma2Weight::one);
    return {approx(sum3_lhs(r, s, false, ctx)), approx(zp_eval(poly, ctx)), 1e-8};
  }
  const auto gamma = gamma_ratio_coeffs(r);
  ZetaPolynomial poly;
  for (int i = 0; i <= r; ++i) {
    const Rational sign(i % 2 == 0 ? 1 : -1);
    poly += gamma.coeffs[i] * lemma2_reduce(r - i, s, 1, 2, Lemma2Weight::product_r_plus_1) * sign;
  }
  return {approx(sum4_lhs(r, s, ctx)), approx(zp_eval(poly, ctx)), 1e-8};
}

void register_application1(std::vector<CheckSpec>& out) {
  using PS = ParamSpec;
  out.push_back({"eq05", "zeta_-({1}^m, 2) against its Li_k(1/2) closed form",
                 {PS::integer("m", 0, 6)},
                 grid({{"m", int_range(0, 3)}}),
                 eq05});
  out.push_back({"eq06", "zeta_-(1, 3) against its Li_4(1/2) closed form", {}, {Params{}}, eq06});
  out.push_back({"eq07", "signed alternating sum equals the sum of zeta-star({r_i+2})",
                 {PS::integer("r", 0, 6), PS::integer("s", 1, 4)},
                 grid({{"r", int_range(0, 4)}, {"s", int_range(1, 3)}}),
                 eq07});
  out.push_back({"eq08", "power-of-two alternating sum against the gamma-ratio convolution",
                 {PS::integer("r", 0, 6), PS::integer("s", 1, 4)},
                 grid({{"r", int_range(0, 3)}, {"s", int_range(1, 3)}}),
                 eq08});
  out.push_back({"eq09", "weighted zeta-star sums over compositions vs their symmetric reduction",
                 {PS::integer("r", 0, 5), PS::integer("k", 1, 4), PS::integer("q", 0, 3), PS::integer("s", 2, 4),
                  PS::choice("weight", {"one", "product_r_plus_1"})},
                 grid({{"r", int_range(0, 3)},
                       {"k", int_range(1, 3)},
                       {"q", int_range(1, 2)},
                       {"s", int_range(2, 3)},
                       {"weight", choices({"one", "product_r_plus_1"})}}),
                 eq09});
  const std::vector<std::string> exponent_sets = {"2,2", "2,3", "3,4", "2,2,2", "2,2,3",
                                                  "2,3,4", "3,3,4", "2,2,2,2", "2,2,3,3"};
  out.push_back({"eq10", "sum over all orderings of zeta or zeta-star vs the set-partition formula",
                 {PS::choice("exponents", exponent_sets), PS::choice("variant", {"strict", "star"})},
                 grid({{"exponents", choices(exponent_sets)}, {"variant", choices({"strict", "star"})}}),
                 eq10});
  out.push_back({"eq11", "symbolic Taylor coefficients of Gamma(a)^2/Gamma(2a-1) vs interpolation",
                 {PS::integer("i", 0, max_gamma_order)},
                 grid({{"i", int_range(0, 8)}}),
                 eq11});
  out.push_back({"eq12", "binomial sum of zeta-star_- values equals the first-weighted star sum",
                 {PS::integer("r", 0, 6), PS::integer("s", 1, 4)},
                 grid({{"r", int_range(0, 4)}, {"s", int_range(1, 3)}}),
                 eq12});
  out.push_back({"eq13", "zeta_- with leading ones summing to zeta(r+2)",
                 {PS::integer("r", 0, 8)},
                 grid({{"r", int_range(0, 6)}}),
                 eq13});
  out.push_back({"eq14", "zeta-star_- with leading ones summing to (r+1) zeta(r+2)",
                 {PS::integer("r", 0, 8)},
                 grid({{"r", int_range(0, 6)}}),
                 eq14});
  out.push_back({"remark3i", "alternative form with zeta-star({{1}^{r_i}, 2})",
                 {PS::integer("r", 0, 5), PS::integer("s", 1, 3)},
                 grid({{"r", int_range(0, 3)}, {"s", int_range(1, 3)}}),
                 remark3i});
  out.push_back({"thm1_sum3", "signed alternating sum vs its reduced zeta polynomial",
                 {PS::integer("r", 0, 4), PS::integer("s", 1, 3)},
                 grid({{"r", int_range(0, 4)}, {"s", int_range(1, 3)}}),
                 [](const Params& p, const PrecisionContext& ctx) {
                   return theorem1_check(p, ctx, Theorem1Sum::sum3);
                 }});
  out.push_back({"thm1_sum4", "power-of-two alternating sum vs its reduced zeta polynomial",
                 {PS::integer("r", 0, 4), PS::integer("s", 1, 3)},
                 grid({{"r", int_range(0, 4)}, {"s", int_range(1, 3)}}),
                 [](const Params& p, const PrecisionContext& ctx) {
                   return theorem1_check(p, ctx, Theorem1Sum::sum4);
                 }});
}

}  // namespace mzvkit::detail
