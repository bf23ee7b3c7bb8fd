#include <mzvkit/detail/asymptotic_series.hpp>

#include <cmath>

namespace mzvkit::detail {

AsymptoticSeries::AsymptoticSeries(Real beta, std::vector<Real> coeffs, int order)
    : beta_(std::move(beta)), c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(order), Real(0));
}

AsymptoticSeries AsymptoticSeries::one(int order) {
  return AsymptoticSeries(Real(0), {Real(1)}, order);
}

AsymptoticSeries AsymptoticSeries::power(const Real& k, const Real& shift, int order) {
  return AsymptoticSeries(k, {Real(1)}, order).shifted(shift);
}

Real AsymptoticSeries::operator()(const Real& x) const {
  const Real inv = 1 / x;
  Real acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inv + *it;
  return acc * pow(x, -beta_);
}

AsymptoticSeries AsymptoticSeries::operator*(const AsymptoticSeries& other) const {
  const int P = std::min(order(), other.order());
  std::vector<Real> c(static_cast<std::size_t>(P), Real(0));
  for (int i = 0; i < P; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j < P; ++j) c[i + j] += c_[i] * other.c_[j];
  }
  return AsymptoticSeries(beta_ + other.beta_, std::move(c), P);
}

AsymptoticSeries AsymptoticSeries::scaled(const Real& f) const {
  std::vector<Real> c = c_;
  for (auto& v : c) v *= f;
  return AsymptoticSeries(beta_, std::move(c), order());
}

AsymptoticSeries AsymptoticSeries::normalized(const Real& x, const Real& exact) const {
  const Real here = (*this)(x);
  if (here == 0) throw DomainError("cannot normalize a vanishing expansion");
  return scaled(exact / here);
}

AsymptoticSeries AsymptoticSeries::shifted(const Real& h) const {
  if (h == 0) return *this;
  const int P = order();
  std::vector<Real> c(static_cast<std::size_t>(P), Real(0));
  for (int p = 0; p < P; ++p) {
    if (c_[p] == 0) continue;
    // (x+h)^(-e) = sum_j C(-e, j) h^j x^(-e-j)
    const Real e = -(beta_ + p);
    Real t = c_[p];
    for (int j = 0; p + j < P; ++j) {
      c[p + j] += t;
      t = t * (e - j) / (j + 1) * h;
    }
  }
  return AsymptoticSeries(beta_, std::move(c), P);
}

AsymptoticSeries AsymptoticSeries::tail_sum() const {
  const int P = order();
  const auto& B = bernoulli_reals(P + 2);
  std::vector<Real> c(static_cast<std::size_t>(P), Real(0));
  for (int p = 0; p < P; ++p) {
    if (c_[p] == 0) continue;
    const Real s = beta_ + p;
    if (s <= 1) throw DomainError("tail_sum: divergent term in expansion");
    c[p] += c_[p] / (s - 1);
    if (p + 1 < P) c[p + 1] += c_[p] / 2;
    Real poch = s;    // (s)_{2j-1}
    Real fact(2);     // (2j)!
    for (int j = 1; p + 2 * j < P; ++j) {
      c[p + 2 * j] += c_[p] * B[2 * j] / fact * poch;
      poch *= (s + 2 * j - 1) * (s + 2 * j);
      fact *= (2 * j + 1) * (2 * j + 2);
    }
  }
  return AsymptoticSeries(beta_ - 1, std::move(c), P);
}

std::vector<Real> series_log(const std::vector<Real>& f) {
  const std::size_t P = f.size();
  std::vector<Real> L(P, Real(0));
  for (std::size_t n = 1; n < P; ++n) {
    Real acc(0);
    for (std::size_t k = 1; k < n; ++k) acc += Real(static_cast<long>(k)) * L[k] * f[n - k];
    L[n] = f[n] - acc / static_cast<long>(n);
  }
  return L;
}

std::vector<Real> series_exp(const std::vector<Real>& g) {
  const std::size_t P = g.size();
  std::vector<Real> r(P, Real(0));
  if (P == 0) return r;
  r[0] = 1;
  for (std::size_t n = 1; n < P; ++n) {
    Real acc(0);
    for (std::size_t k = 1; k <= n; ++k) acc += Real(static_cast<long>(k)) * g[k] * r[n - k];
    r[n] = acc / static_cast<long>(n);
  }
  return r;
}

namespace {

// B_n(a) = sum_k C(n, k) B_k a^(n-k)
std::vector<Real> bernoulli_polynomials(const Real& a, int upto) {
  const auto& B = bernoulli_reals(upto + 1);
  std::vector<Real> apow(static_cast<std::size_t>(upto) + 1);
  apow[0] = 1;
  for (int i = 1; i <= upto; ++i) apow[i] = apow[i - 1] * a;
  std::vector<Real> out(static_cast<std::size_t>(upto) + 1);
  for (int n = 0; n <= upto; ++n) {
    Real acc(0);
    Real binom(1);
    for (int k = 0; k <= n; ++k) {
      acc += binom * B[k] * apow[n - k];
      binom = binom * (n - k) / (k + 1);
    }
    out[n] = acc;
  }
  return out;
}

}  // namespace

AsymptoticSeries AsymptoticSeries::gamma_ratio(const std::vector<Real>& num,
                                               const std::vector<Real>& den, int order) {
  if (num.size() != den.size()) {
    throw std::invalid_argument("gamma_ratio needs balanced parameter lists");
  }
  // log Gamma(x+a) - log Gamma(x+b) ~ (a-b) log x
  //     + sum_n (-1)^(n+1) (B_{n+1}(a) - B_{n+1}(b)) / (n (n+1)) x^(-n)
  std::vector<Real> g(static_cast<std::size_t>(order), Real(0));
  Real shift(0);
  auto add = [&](const Real& a, int sign) {
    shift += sign * a;
    const auto bp = bernoulli_polynomials(a, order + 1);
    for (int n = 1; n < order; ++n) {
      Real t = bp[n + 1] / (static_cast<long>(n) * (n + 1));
      if (n % 2 == 0) t = -t;
      g[n] += sign * t;
    }
  };
  for (const auto& a : num) add(a, 1);
  for (const auto& b : den) add(b, -1);
  return AsymptoticSeries(-shift, series_exp(g), order);
}

AsymptoticSeries AsymptoticSeries::binomial_transform(const Real& e) const {
  // sum_l (e)_l/l! (x+l)^(-d) ~ sum_j g_j Gamma(d-e+j)/Gamma(d) x^(-(d-e+j)),
  // with sum_j g_j t^j = (t / (1 - e^(-t)))^e.
  const int P = order();
  const auto& B = bernoulli_reals(P + 1);
  std::vector<Real> b(static_cast<std::size_t>(P));
  Real fact(1);
  for (int n = 0; n < P; ++n) {
    if (n > 0) fact *= n;
    b[n] = (n == 1 ? Real(0.5) : B[n]) / fact;
  }
  auto L = series_log(b);
  for (auto& v : L) v *= e;
  const auto g = series_exp(L);

  if (!(beta_ - e > 0)) throw DomainError("binomial_transform: divergent sum");
  std::vector<Real> c(static_cast<std::size_t>(P), Real(0));
  Real r0 = exp(log_gamma(beta_ - e).value - log_gamma(beta_).value);  // Gamma(d-e)/Gamma(d)
  for (int p = 0; p < P; ++p) {
    const Real d = beta_ + p;
    if (c_[p] != 0) {
      Real r = r0;
      for (int j = 0; p + j < P; ++j) {
        c[p + j] += c_[p] * g[j] * r;
        r *= d - e + j;
      }
    }
    r0 = r0 * (d - e) / d;
  }
  return AsymptoticSeries(beta_ - e, std::move(c), P);
}

int series_order() {
  return static_cast<int>(std::ceil(1.2 * current_digits())) + 10;
}

long default_cutoff() { return std::max(30, current_digits()); }

Real nested_sum(const std::vector<NestedLevel>& levels, const std::vector<Link>& links,
                long cutoff) {
  const std::size_t n = levels.size();
  if (n == 0 || links.size() + 1 != n) throw std::invalid_argument("nested_sum: bad shape");
  const Real x(cutoff);

  std::vector<AsymptoticSeries> shapes;
  shapes.reserve(n);
  for (const auto& lv : levels) shapes.push_back(lv.shape.normalized(x, lv.value(cutoff)));

  // tails[j] = T_{j+1}(x): all variables from level j+1 on are >= x.
  std::vector<Real> tails(n + 1, Real(1));
  AsymptoticSeries t = shapes[n - 1].tail_sum();
  tails[n - 1] = t(x);
  for (std::size_t i = n - 1; i-- > 0;) {
    const Real h = links[i] == Link::strict ? Real(1) : Real(0);
    t = (shapes[i] * t.shifted(h)).tail_sum();
    tails[i] = t(x);
  }

  // S[j]: first j levels, all variables < m.
  std::vector<Real> S(n + 1, Real(0));
  std::vector<Real> prev(n + 1);
  S[0] = 1;
  for (long m = 0; m < cutoff; ++m) {
    prev = S;
    for (std::size_t j = 1; j <= n; ++j) {
      const bool strict = j >= 2 && links[j - 2] == Link::strict;
      S[j] += levels[j - 1].value(m) * (strict ? prev[j - 1] : S[j - 1]);
    }
  }
  Real total = S[n];
  for (std::size_t j = 0; j < n; ++j) total += S[j] * tails[j];
  return total;
}

BigReal nested_sum_with_error(const std::vector<NestedLevel>& levels,
                              const std::vector<Link>& links, long& terms_used) {
  const long N = default_cutoff();
  const long N2 = N + N / 2;
  const Real v1 = nested_sum(levels, links, N);
  const Real v2 = nested_sum(levels, links, N2);
  terms_used = N2;
  const Real floor = epsilon_at(current_digits() - 2) * (abs(v2) + 1) * N2;
  return {v2, abs(v2 - v1) + floor};
}

long cvz_terms() { return static_cast<long>(std::ceil(1.31 * current_digits())) + 2; }

BigReal alternating_sum(std::span<const Real> a, long head) {
  const long K = static_cast<long>(a.size());
  if (K < head + 8) throw std::invalid_argument("alternating_sum: too few terms");
  Real h(0);
  for (long m = 0; m < head; ++m) h += (m % 2 ? -a[m] : a[m]);
  const auto rest = a.subspan(static_cast<std::size_t>(head));
  Real tail = cvz_sum(rest);
  const Real prev = cvz_sum(rest.first(rest.size() - 1));
  const Real err = 10 * abs(tail - prev);
  if (head % 2) tail = -tail;
  Real v = h + tail;
  const Real floor = epsilon_at(current_digits() - 2) * (abs(v) + abs(h) + 1);
  return {v, err + floor};
}

}  // namespace mzvkit::detail
