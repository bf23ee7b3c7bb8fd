#include <mzvkit/numerics.hpp>

#include <cmath>
#include <sstream>

namespace mzvkit {

Real cvz_sum(std::span<const Real> a) {
  const long n = static_cast<long>(a.size());
  if (n == 0) return Real(0);
  Real d = pow(3 + sqrt(Real(8)), n);
  d = (d + 1 / d) / 2;
  Real b(-1);
  Real c = -d;
  Real s(0);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a[k];
    b = b * Real(k + n) * Real(k - n) / ((Real(k) + Real(0.5)) * Real(k + 1));
  }
  return s / d;
}

namespace {

// Levin u-transform over s_0..s_k with remainder estimates omega_j = (j+1) a_j.
// Returns false when some omega_j vanishes.
bool levin_u(std::span<const Real> s, Real& out) {
  const long k = static_cast<long>(s.size()) - 1;
  Real num(0);
  Real den(0);
  Real binom(1);  // C(k, j)
  for (long j = 0; j <= k; ++j) {
    const Real a = j == 0 ? s[0] : s[j] - s[j - 1];
    if (a == 0) return false;
    const Real omega = Real(j + 1) * a;
    Real w = binom * pow(Real(j + 1) / Real(k + 1), k - 1) / omega;
    if (j % 2 == 1) w = -w;
    num += w * s[j];
    den += w;
    binom = binom * Real(k - j) / Real(j + 1);
  }
  if (den == 0) return false;
  out = num / den;
  return true;
}

// Neville extrapolation to h = 0 with h_j = 1/(j+1).
Real richardson(std::span<const Real> s) {
  const long n = static_cast<long>(s.size());
  std::vector<Real> t(s.begin(), s.end());
  for (long m = 1; m < n; ++m) {
    for (long i = n - 1; i >= m; --i) {
      // h_i = 1/(i+1), h_{i-m} = 1/(i-m+1)
      const Real hi = Real(1) / Real(i + 1);
      const Real hl = Real(1) / Real(i - m + 1);
      t[i] = t[i] + (t[i] - t[i - 1]) * hi / (hl - hi);
    }
  }
  return t[n - 1];
}

bool constant_tail(std::span<const Real> s) {
  for (std::size_t j = 1; j < s.size(); ++j) {
    if (s[j] != s[0]) return false;
  }
  return true;
}

}  // namespace

BigReal accelerate(std::span<const Real> terms, AccelerationScheme scheme,
                   const PrecisionContext& ctx) {
  if (terms.size() < 8) {
    throw std::invalid_argument("accelerate: at least 8 entries are required");
  }
  const Real floor = epsilon_at(current_digits() - 2);
  Real value;
  Real prev;
  switch (scheme) {
    case AccelerationScheme::alternating_cvz: {
      std::vector<Real> a(terms.begin(), terms.end());
      for (std::size_t k = 1; k < a.size(); k += 2) a[k] = -a[k];
      value = cvz_sum(a);
      a.pop_back();
      prev = cvz_sum(a);
      break;
    }
    case AccelerationScheme::levin_u: {
      if (constant_tail(terms)) return {terms.back(), Real(0)};
      if (!levin_u(terms, value) || !levin_u(terms.first(terms.size() - 1), prev)) {
        throw NonConvergenceError("levin-u: vanishing remainder estimate", INFINITY);
      }
      break;
    }
    case AccelerationScheme::richardson: {
      if (constant_tail(terms)) return {terms.back(), Real(0)};
      value = richardson(terms);
      prev = richardson(terms.first(terms.size() - 1));
      break;
    }
  }
  const Real err = 10 * abs(value - prev) + floor * (1 + abs(value));
  if (err > Real(ctx.target_tolerance)) {
    std::ostringstream os;
    os << "acceleration did not reach tolerance " << ctx.target_tolerance
       << " (estimate " << static_cast<double>(err) << ")";
    throw NonConvergenceError(os.str(), static_cast<double>(err));
  }
  return {value, err};
}

}  // namespace mzvkit
