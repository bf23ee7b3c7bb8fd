#include <mzvkit/numerics.hpp>

#include <mpfr.h>

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace mzvkit {

namespace {

Real rounding(const Real& v) { return abs(v) * epsilon_at(current_digits() - 2); }

// Stirling and Euler-Maclaurin need x >= shift_floor for the asymptotic
// terms to reach 10^(-digits) before they start to grow.
double shift_floor() { return std::max(10.0, 0.6 * current_digits()); }

long shift_count(const Real& x) {
  const double xd = static_cast<double>(x);
  const double f = shift_floor();
  return xd >= f ? 0 : static_cast<long>(std::ceil(f - xd));
}

}  // namespace

Real pi_constant() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real log2_constant() {
  Real r;
  mpfr_const_log2(r.backend().data(), MPFR_RNDN);
  return r;
}

BigReal log_gamma(const Real& x) {
  if (!(x > 0)) throw DomainError("log_gamma: argument must be positive");
  const long n = shift_count(x);
  Real prod(1);
  for (long k = 0; k < n; ++k) prod *= x + k;
  const Real y = x + n;

  const Real eps = epsilon_at(current_digits());
  const auto& B = bernoulli_reals(2 * current_digits() + 20);
  const Real inv = 1 / y;
  const Real inv2 = inv * inv;
  Real sum = (y - Real(0.5)) * log(y) - y + log(2 * pi_constant()) / 2;
  Real p = inv;
  Real last = abs(y);
  Real err(0);
  for (int j = 1; 2 * j < static_cast<int>(B.size()); ++j) {
    Real term = B[2 * j] / (2 * j * (2 * j - 1)) * p;
    if (abs(term) > last) break;
    sum += term;
    err = abs(term);
    last = err;
    if (err < eps * abs(sum)) break;
    p *= inv2;
  }
  if (n > 0) sum -= log(prod);
  return {sum, err + rounding(sum) + eps};
}

BigReal digamma(const Real& x) {
  if (!(x > 0)) throw DomainError("digamma: argument must be positive");
  const long n = shift_count(x);
  Real shift(0);
  for (long k = 0; k < n; ++k) shift += 1 / (x + k);
  const Real y = x + n;

  const Real eps = epsilon_at(current_digits());
  const auto& B = bernoulli_reals(2 * current_digits() + 20);
  const Real inv2 = 1 / (y * y);
  Real sum = log(y) - 1 / (2 * y);
  Real p = inv2;
  Real last = abs(y);
  Real err(0);
  for (int j = 1; 2 * j < static_cast<int>(B.size()); ++j) {
    Real term = -B[2 * j] / (2 * j) * p;
    if (abs(term) > last) break;
    sum += term;
    err = abs(term);
    last = err;
    if (err < eps * abs(sum)) break;
    p *= inv2;
  }
  sum -= shift;
  return {sum, err + rounding(sum) + eps};
}

BigReal hurwitz_zeta(const Real& s, const Real& a) {
  if (!(s > 1)) throw DomainError("hurwitz_zeta: s must exceed 1");
  if (!(a > 0)) throw DomainError("hurwitz_zeta: a must be positive");
  const long n = shift_count(a);
  Real head(0);
  for (long m = 0; m < n; ++m) head += pow(a + m, -s);
  const Real x = a + n;

  // sum_{m>=0} (m+x)^(-s) ~ x^(1-s)/(s-1) + x^(-s)/2
  //                         + sum_j B_{2j}/(2j)! (s)_{2j-1} x^(-s-2j+1)
  const Real eps = epsilon_at(current_digits());
  const auto& B = bernoulli_reals(2 * current_digits() + 20);
  const Real xs = pow(x, -s);
  Real tail = x * xs / (s - 1) + xs / 2;
  const Real inv2 = 1 / (x * x);
  Real poch = s;  // (s)_{2j-1}
  Real fact(2);   // (2j)!
  Real p = xs / x;
  Real last = abs(tail);
  Real err(0);
  for (int j = 1; 2 * j < static_cast<int>(B.size()); ++j) {
    Real term = B[2 * j] / fact * poch * p;
    if (abs(term) > last) break;
    tail += term;
    err = abs(term);
    last = err;
    if (err < eps * abs(tail)) break;
    poch *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    p *= inv2;
  }
  Real v = head + tail;
  return {v, err + rounding(v) * (n + 1)};
}

BigReal zeta_value(int k) {
  if (k < 2) throw DomainError("zeta_value: k must be at least 2");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, BigReal> cache;
  const auto key = std::make_pair(current_digits(), k);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  BigReal result;
  if (k % 2 == 0) {
    const auto z = zeta_even_exact(k / 2);
    Real v = to_real(z.coefficient) * pow(pi_constant(), z.pi_power);
    result = BigReal(v, rounding(v));
  } else {
    // eta(k) = sum_{m>=0} (-1)^m (m+1)^(-k) = (1 - 2^(1-k)) zeta(k)
    const int n = static_cast<int>(std::ceil(1.31 * current_digits())) + 2;
    std::vector<Real> a(n);
    for (int m = 0; m < n; ++m) a[m] = pow(Real(m + 1), -k);
    const Real eta = cvz_sum(a);
    a.pop_back();
    const Real eta_prev = cvz_sum(a);
    const Real factor = 1 - pow(Real(2), 1 - k);
    Real v = eta / factor;
    result = BigReal(v, abs(eta - eta_prev) / factor + rounding(v));
  }
  std::lock_guard lock(mutex);
  cache.emplace(key, result);
  return result;
}

}  // namespace mzvkit
