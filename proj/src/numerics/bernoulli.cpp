#include <mzvkit/numerics.hpp>

#include <map>
#include <mutex>

namespace mzvkit {

namespace {

struct BernoulliTable {
  std::mutex mutex;
  std::vector<Rational> values{Rational(1)};

  // Caller holds the mutex.
  void extend_to(int n) {
    while (static_cast<int>(values.size()) <= n) {
      const int m = static_cast<int>(values.size());
      // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -(1/(m+1)) sum_{j<m} C(m+1, j) B_j
      if (m >= 3 && m % 2 == 1) {
        values.emplace_back(0);
        continue;
      }
      Rational acc(0);
      Integer c(1);  // C(m+1, j)
      for (int j = 0; j < m; ++j) {
        acc += Rational(c) * values[j];
        c = c * (m + 1 - j) / (j + 1);
      }
      values.emplace_back(-acc / Rational(m + 1));
    }
  }
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli: negative index");
  auto& t = table();
  std::lock_guard lock(t.mutex);
  t.extend_to(n);
  return t.values[n];
}

const std::vector<Real>& bernoulli_reals(int count) {
  static std::mutex mutex;
  static std::map<int, std::vector<Real>> cache;
  const int digits = current_digits();
  std::lock_guard lock(mutex);
  auto& v = cache[digits];
  if (static_cast<int>(v.size()) <= count) {
    const int target = std::max(count, 256);
    auto& t = table();
    std::lock_guard inner(t.mutex);
    t.extend_to(target);
    v.clear();
    v.reserve(target + 1);
    for (int i = 0; i <= target; ++i) v.push_back(to_real(t.values[i]));
  }
  return v;
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  Integer r(1);
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational binomial(const Integer& n, long k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  for (long j = 0; j < k; ++j) num *= Rational(n - k + 1 + j);
  return num / Rational(factorial(k));
}

Rational binomial(long n, long k) { return binomial(Integer(n), k); }

Rational pochhammer(const Rational& a, long m) {
  if (m < 0) throw DomainError("pochhammer: negative length");
  Rational r(1);
  for (long j = 0; j < m; ++j) r *= a + j;
  return r;
}

BigReal pochhammer(const Real& a, long m) {
  if (m < 0) throw DomainError("pochhammer: negative length");
  Real r(1);
  for (long j = 0; j < m; ++j) r *= a + j;
  // One rounding per factor.
  return {r, abs(r) * epsilon_at(current_digits() - 1) * (m + 1)};
}

ZetaEvenValue zeta_even_exact(int s) {
  if (s < 1) throw DomainError("zeta_even_exact: s must be positive");
  // zeta(2s) = (-1)^(s-1) B_{2s} (2 pi)^(2s) / (2 (2s)!)
  Rational q = bernoulli(2 * s) * Rational(Integer(1) << (2 * s)) /
               Rational(2 * factorial(2 * s));
  if (s % 2 == 0) q = -q;
  return {q, 2 * s};
}

}  // namespace mzvkit
