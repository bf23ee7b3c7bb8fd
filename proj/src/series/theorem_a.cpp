#include <mzvkit/series.hpp>
#include <mzvkit/detail/asymptotic_series.hpp>

#include <sstream>

namespace mzvkit {

using detail::AsymptoticSeries;

void TheoremAParams::validate_shape() const {
  if (s < 1) throw DomainError("Theorem A: s must be positive");
  if (b.size() != static_cast<std::size_t>(s) + 1 || c.size() != static_cast<std::size_t>(s) + 1) {
    throw DomainError("Theorem A: b and c need s+1 entries");
  }
}

namespace {

bool nonpositive_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1 && q <= 0;
}

Rational excess(const TheoremAParams& p, int i) { return 1 + p.a - p.b[i] - p.c[i]; }

void require_tolerance(const SeriesValue& v, const PrecisionContext& ctx, const char* what) {
  if (v.value.err > Real(ctx.target_tolerance)) {
    std::ostringstream os;
    os << what << ": error estimate " << static_cast<double>(v.value.err)
       << " exceeds tolerance " << ctx.target_tolerance;
    throw NonConvergenceError(os.str(), static_cast<double>(v.value.err));
  }
}

}  // namespace

TheoremAConditions check_theorem_a_conditions(const TheoremAParams& p) {
  p.validate_shape();
  TheoremAConditions out;
  const int s = p.s;
  Rational sum(0);
  for (int i = 0; i <= s; ++i) sum += p.b[i] + p.c[i];
  out.c1_margin = Rational(2 * s + 1) * (p.a + 1) - 2 * sum;
  out.c1 = out.c1_margin > 0;

  // A_2..A_s range over {1, 2}; A_{s+1} = 1. Indices below are 0-based.
  bool first = true;
  const unsigned choices = 1u << (s - 1);
  for (unsigned mask = 0; mask < choices; ++mask) {
    for (int r = 1; r <= s; ++r) {
      Rational acc(0);
      for (int i = r; i <= s; ++i) {
        const int A = (i == s) ? 1 : ((mask >> (i - 1)) & 1u ? 2 : 1);
        acc += A * excess(p, i);
      }
      if (first || acc < out.c2_margin) out.c2_margin = acc;
      first = false;
    }
  }
  out.c2 = out.c2_margin > 0;

  out.poles = true;
  for (int i = 0; i <= s; ++i) {
    if (nonpositive_integer(1 + p.a - p.b[i]) || nonpositive_integer(1 + p.a - p.c[i])) {
      out.poles = false;
    }
  }
  return out;
}

SeriesValue eval_theorem_a_lhs(const TheoremAParams& p, const PrecisionContext& ctx) {
  ctx.validate();
  const auto cond = check_theorem_a_conditions(p);
  if (!cond.c1) throw DomainError("Theorem A: convergence condition C1 fails");
  if (!cond.poles) throw DomainError("Theorem A: denominator parameter at a pole");
  if (p.a == 0) throw DomainError("Theorem A: a must be non-zero");
  PrecisionGuard guard(ctx);

  const Real a = to_real(p.a);
  std::vector<Real> num;
  std::vector<Real> den;
  for (int i = 0; i <= p.s; ++i) {
    num.push_back(to_real(p.b[i]));
    num.push_back(to_real(p.c[i]));
    den.push_back(to_real(1 + p.a - p.b[i]));
    den.push_back(to_real(1 + p.a - p.c[i]));
  }
  // t_m carries (a)_m/m! (a+2m)/a and the b, c ratios.
  const long head = detail::alternating_head;
  const long K = head + detail::cvz_terms();
  std::vector<Real> t(static_cast<std::size_t>(K));
  Real ratio_part(1);
  for (long m = 0; m < K; ++m) {
    t[m] = ratio_part * (a + 2 * m) / a;
    Real r = (a + m) / (m + 1);
    for (std::size_t j = 0; j < num.size(); ++j) r *= (num[j] + m) / (den[j] + m);
    ratio_part *= r;
  }
  SeriesValue out;
  out.value = detail::alternating_sum(t, head);
  out.terms_used = K;
  out.method = "cvz";
  require_tolerance(out, ctx, "Theorem A lhs");
  return out;
}

namespace {

// G_i(M) = sum_l P_i(l) Q_i(M+l) G_{i+1}(M+l), G_{s+1} = 1; returns G_1(0).
Real theorem_a_sum(const TheoremAParams& p, long N) {
  const int s = p.s;
  const int P = detail::series_order();
  const long L = 6 * N;
  const long Y = N + L;
  const Real a = to_real(p.a);

  std::vector<Real> g_next(static_cast<std::size_t>(Y), Real(1));
  AsymptoticSeries g_next_series = AsymptoticSeries::one(P);

  for (int i = s - 1; i >= 0; --i) {
    const Real e = to_real(excess(p, i));
    const Real bn = to_real(p.b[i + 1]);
    const Real cn = to_real(p.c[i + 1]);
    const Real db = to_real(1 + p.a - p.b[i]);
    const Real dc = to_real(1 + p.a - p.c[i]);

    std::vector<Real> h(static_cast<std::size_t>(Y));
    Real q(1);
    Real qN;
    for (long y = 0; y < Y; ++y) {
      if (y == N) qN = q;
      h[y] = q * g_next[y];
      q = q * (bn + y) * (cn + y) / ((db + y) * (dc + y));
    }
    const AsymptoticSeries q_shape =
        AsymptoticSeries::gamma_ratio({bn, cn}, {db, dc}, P).normalized(Real(N), qN);
    const AsymptoticSeries h_series = q_shape * g_next_series;

    std::vector<Real> pl(static_cast<std::size_t>(L) + 1);
    pl[0] = 1;
    for (long l = 0; l < L; ++l) pl[l + 1] = pl[l] * (e + l) / (l + 1);
    const AsymptoticSeries p_shape =
        AsymptoticSeries::gamma_ratio({e}, {Real(1)}, P).normalized(Real(L), pl[L]);

    const long count = (i == 0) ? 1 : N;
    std::vector<Real> g_cur(static_cast<std::size_t>(Y));
    for (long M = 0; M < count; ++M) {
      Real direct(0);
      for (long l = 0; l < L; ++l) direct += pl[l] * h[M + l];
      const Real tail = (p_shape * h_series.shifted(Real(M))).tail_sum()(Real(L));
      g_cur[M] = direct + tail;
    }
    if (i == 0) return g_cur[0];

    g_next_series = h_series.binomial_transform(e);
    for (long y = N; y < Y; ++y) g_cur[y] = g_next_series(Real(y));
    g_next = std::move(g_cur);
  }
  return Real(1);
}

}  // namespace

SeriesValue eval_theorem_a_rhs(const TheoremAParams& p, const PrecisionContext& ctx) {
  ctx.validate();
  const auto cond = check_theorem_a_conditions(p);
  if (!cond.c2) throw DomainError("Theorem A: convergence condition C2 fails");
  if (!cond.poles) throw DomainError("Theorem A: denominator parameter at a pole");
  const int s = p.s;
  for (int i = 0; i <= s; ++i) {
    if (excess(p, i) <= 0) throw DomainError("Theorem A rhs: needs 1+a-b_i-c_i > 0");
    if (1 + p.a - p.b[i] <= 0 || 1 + p.a - p.c[i] <= 0) {
      throw DomainError("Theorem A rhs: needs positive 1+a-b_i and 1+a-c_i");
    }
  }
  if (1 + p.a <= 0) throw DomainError("Theorem A rhs: needs 1+a > 0");
  PrecisionGuard guard(ctx);

  const BigReal lg = log_gamma(to_real(1 + p.a - p.b[s])) + log_gamma(to_real(1 + p.a - p.c[s])) -
                     log_gamma(to_real(1 + p.a)) - log_gamma(to_real(excess(p, s)));
  const Real pref = exp(lg.value);

  const long N = detail::default_cutoff();
  const long N2 = N + N / 2;
  const Real v1 = theorem_a_sum(p, N);
  const Real v2 = theorem_a_sum(p, N2);
  const Real v = pref * v2;
  SeriesValue out;
  out.value = BigReal(v, abs(pref) * abs(v2 - v1) + abs(v) * lg.err +
                             epsilon_at(current_digits() - 2) * (abs(v) + 1) * 7 * N2);
  out.terms_used = 7 * N2;
  out.method = "split-tail";
  require_tolerance(out, ctx, "Theorem A rhs");
  return out;
}

}  // namespace mzvkit
