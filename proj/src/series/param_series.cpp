#include <mzvkit/series.hpp>
#include <mzvkit/detail/asymptotic_series.hpp>

#include <sstream>

namespace mzvkit {

using detail::AsymptoticSeries;
using detail::Link;
using detail::NestedLevel;

namespace {

// C(n+j-1, j): the coefficient of (-1)^j/j! d^j/da^j (m+a)^(-n).
Real rising_binomial(int n, int j) {
  Real r(1);
  for (int t = 0; t < j; ++t) r = r * (n + t) / (t + 1);
  return r;
}

SeriesValue finish(BigReal v, long terms, std::string method, const PrecisionContext& ctx) {
  SeriesValue out{std::move(v), terms, std::move(method)};
  if (out.value.err > Real(ctx.target_tolerance)) {
    std::ostringstream os;
    os << "parameter series: error estimate " << static_cast<double>(out.value.err)
       << " exceeds tolerance " << ctx.target_tolerance;
    throw NonConvergenceError(os.str(), static_cast<double>(out.value.err));
  }
  return out;
}

SeriesValue lemma1_lhs(const Real& alpha, int s, int r, const PrecisionContext& ctx) {
  const long head = detail::alternating_head;
  const long K = head + detail::cvz_terms();
  const Real w = 2 * alpha - 1;
  std::vector<Real> coef(static_cast<std::size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) coef[j] = rising_binomial(2 * s + 1, j);

  std::vector<Real> E(static_cast<std::size_t>(r) + 1, Real(0));  // e_i(1/(j+w), j <= m)
  E[0] = 1;
  Real q = w;  // (w)_{m+1} / m!
  std::vector<Real> t(static_cast<std::size_t>(K));
  for (long m = 0; m < K; ++m) {
    if (m > 0) q = q * (w + m) / m;
    const Real x = 1 / (w + m);
    for (int i = r; i >= 1; --i) E[i] += x * E[i - 1];
    const Real inv = 1 / (alpha + m);
    Real acc(0);
    Real two_pow(1);  // (-2)^i
    for (int i = 0; i <= r; ++i) {
      const int j = r - i;
      acc += two_pow * E[i] * coef[j] * pow(inv, 2 * s + 1 + j);
      two_pow *= -2;
    }
    t[m] = 2 * q * acc;
  }
  return finish(detail::alternating_sum(t, head), K, "cvz", ctx);
}

SeriesValue theorem2_lhs(const Real& alpha, int s, int r, const PrecisionContext& ctx) {
  const long head = detail::alternating_head;
  const long K = head + detail::cvz_terms();
  std::vector<Real> coef(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) coef[k] = rising_binomial(s, k);

  std::vector<Real> H(static_cast<std::size_t>(r) + 1, Real(0));  // h_i(1/(j+alpha), j <= m)
  H[0] = 1;
  Real p = 1 / alpha;  // m! / (alpha)_{m+1}
  std::vector<Real> t(static_cast<std::size_t>(K));
  for (long m = 0; m < K; ++m) {
    if (m > 0) p = p * m / (alpha + m);
    const Real x = 1 / (alpha + m);
    for (int i = 1; i <= r; ++i) H[i] += x * H[i - 1];
    // Derivatives of (2m + alpha + 1): itself, then -1, then nothing.
    const Real d[2] = {2 * m + alpha + 1, Real(-1)};
    Real acc(0);
    for (int i = 0; i <= r; ++i) {
      for (int j = 0; j <= 1 && i + j <= r; ++j) {
        const int k = r - i - j;
        acc += H[i] * d[j] * coef[k] * pow(x, s + k);
      }
    }
    t[m] = p * acc * pow(Real(m + 1), -s);
  }
  return finish(detail::alternating_sum(t, head), K, "cvz", ctx);
}

SeriesValue lemma1_rhs(const Real& alpha, int s, int r, const PrecisionContext& ctx) {
  // Gamma(a-t)^2 / Gamma(2a-1-2t) = exp(g0 + g1 t + sum_{n>=2} g_n t^n)
  const Real w = 2 * alpha - 1;
  const BigReal g0 = 2 * log_gamma(alpha).value - log_gamma(w).value;
  std::vector<Real> g(static_cast<std::size_t>(r) + 1, Real(0));
  Real gerr(g0.err);
  if (r >= 1) {
    const BigReal d = BigReal(Real(2)) * (digamma(w) - digamma(alpha));
    g[1] = d.value;
    gerr += d.err;
  }
  for (int n = 2; n <= r; ++n) {
    const BigReal za = hurwitz_zeta(Real(n), alpha);
    const BigReal zw = hurwitz_zeta(Real(n), w);
    g[n] = (2 * za.value - pow(Real(2), n) * zw.value) / n;
    gerr += 2 * za.err + pow(Real(2), n) * zw.err;
  }
  auto G = detail::series_exp(g);
  const Real scale = exp(g0.value);
  for (auto& v : G) v *= scale;

  BigReal total;
  long terms = 0;
  for (int i = 0; i <= r; ++i) {
    const int j = r - i;
    BigReal z;
    for (const auto& comp : compositions(j, s)) {
      std::vector<int> parts;
      Real weight(1);
      for (int ji : comp.parts) {
        parts.push_back(2 + ji);
        weight *= ji + 1;
      }
      const SeriesValue v = eval_hurwitz_sum(parts, alpha, false, ctx);
      terms = std::max(terms, v.terms_used);
      z += BigReal(weight) * v.value;
    }
    total += BigReal(G[i], abs(G[i]) * gerr * (i + 1)) * z;
  }
  return finish(total, terms, "split-tail", ctx);
}

SeriesValue theorem2_rhs(const Real& alpha, int s, int r, const PrecisionContext& ctx) {
  const int P = detail::series_order();
  BigReal total;
  long terms = 0;
  for (const auto& comp : compositions(r, s)) {
    std::vector<NestedLevel> levels;
    for (int i = 0; i < s; ++i) {
      const int j = comp.parts[i];
      if (i == 0) {
        const Real f(j + 1);
        levels.push_back({[alpha, j, f](long m) { return f * pow(alpha + m, -2 - j); },
                          AsymptoticSeries::power(Real(2 + j), alpha, P).scaled(f)});
      } else {
        levels.push_back({[alpha, j](long m) { return pow(alpha + m, -1 - j) / (m + 1); },
                          AsymptoticSeries::power(Real(1 + j), alpha, P) *
                              AsymptoticSeries::power(Real(1), Real(1), P)});
      }
    }
    std::vector<Link> links(static_cast<std::size_t>(s - 1), Link::weak);
    long used = 0;
    total += detail::nested_sum_with_error(levels, links, used);
    terms = std::max(terms, used);
  }
  return finish(total, terms, "split-tail", ctx);
}

}  // namespace

SeriesValue eval_param_series(ParamFamily family, const Rational& alpha, int s, Side side, int r,
                              const PrecisionContext& ctx) {
  ctx.validate();
  if (s < 1) throw DomainError("parameter series: s must be positive");
  if (r < 0) throw DomainError("parameter series: derivative order must be non-negative");
  if (family == ParamFamily::lemma1) {
    if (!(alpha * 2 > 1 && alpha < Rational(2 * s + 1, 2))) {
      throw DomainError("lemma1 family needs 1/2 < alpha < s + 1/2");
    }
  } else if (!(alpha > 0)) {
    throw DomainError("theorem2 family needs alpha > 0");
  }
  PrecisionGuard guard(ctx);
  const Real a = to_real(alpha);
  if (family == ParamFamily::lemma1) {
    return side == Side::lhs ? lemma1_lhs(a, s, r, ctx) : lemma1_rhs(a, s, r, ctx);
  }
  return side == Side::lhs ? theorem2_lhs(a, s, r, ctx) : theorem2_rhs(a, s, r, ctx);
}

}  // namespace mzvkit
