#ifndef MZVKIT_NUMERICS_HPP
#define MZVKIT_NUMERICS_HPP

#include <mzvkit/types.hpp>

#include <span>
#include <vector>

namespace mzvkit {

// ---------------------------------------------------------------------------
// BigReal: a value with a non-negative absolute error bound. The arithmetic
// below adds the first-order propagated error and one rounding unit.
// ---------------------------------------------------------------------------
struct BigReal {
  Real value;
  Real err;

  BigReal();
  BigReal(Real v, Real e = Real(0));  // NOLINT(google-explicit-constructor)

  double to_double() const { return static_cast<double>(value); }
};

BigReal operator+(const BigReal& x, const BigReal& y);
BigReal operator-(const BigReal& x, const BigReal& y);
BigReal operator-(const BigReal& x);
BigReal operator*(const BigReal& x, const BigReal& y);
BigReal operator/(const BigReal& x, const BigReal& y);
BigReal& operator+=(BigReal& x, const BigReal& y);
BigReal& operator-=(BigReal& x, const BigReal& y);
BigReal& operator*=(BigReal& x, const BigReal& y);
BigReal scale(const BigReal& x, const Rational& q);
BigReal pow(const BigReal& x, int n);

// ---------------------------------------------------------------------------
// Exact rationals
// ---------------------------------------------------------------------------

/// B_n with B_1 = -1/2, from sum_{j<=n} C(n+1, j) B_j = 0. Memoized; the
/// table grows under a lock and is read-only afterwards.
Rational bernoulli(int n);

/// Bernoulli numbers as Reals at the current working precision (cached per
/// precision).
const std::vector<Real>& bernoulli_reals(int count);

/// Pochhammer-form binomial: (n-k+1)_k / k! for k >= 0, and 0 for k < 0.
/// n may be negative, so binomial(-1, 0) = 1 and binomial(i-1, i) = 0 for i >= 1.
Rational binomial(const Integer& n, long k);
Rational binomial(long n, long k);

Rational pochhammer(const Rational& a, long m);
BigReal pochhammer(const Real& a, long m);

Integer factorial(long n);

/// Rational q with zeta(2s) = q * pi^(2s).
struct ZetaEvenValue {
  Rational coefficient;
  int pi_power = 0;
};
ZetaEvenValue zeta_even_exact(int s);

// ---------------------------------------------------------------------------
// Special functions (real arguments). All read the working precision from
// the active PrecisionGuard.
// ---------------------------------------------------------------------------
Real pi_constant();
Real log2_constant();

/// ln Gamma(x) for x > 0: argument shift followed by the Stirling series.
BigReal log_gamma(const Real& x);
BigReal digamma(const Real& x);

/// sum_{m>=0} (m+a)^(-s), s > 1, a > 0; direct terms plus Euler-Maclaurin tail.
BigReal hurwitz_zeta(const Real& s, const Real& a);

/// Riemann zeta at an integer k >= 2: exact Euler formula for even k,
/// accelerated alternating eta series for odd k. Cached per precision.
BigReal zeta_value(int k);

// ---------------------------------------------------------------------------
// Sequence acceleration
// ---------------------------------------------------------------------------
enum class AccelerationScheme { alternating_cvz, levin_u, richardson };

/// `terms` are the signed summands (-1)^k a_k for alternating_cvz and
/// partial sums for the other schemes; at least 8 entries. The error is the difference between
/// the last two extrapolation orders, times 10. Throws NonConvergenceError
/// when that exceeds ctx.target_tolerance.
BigReal accelerate(std::span<const Real> terms, AccelerationScheme scheme,
                   const PrecisionContext& ctx);

/// Cohen-Villegas-Zagier weighted sum approximating sum_{k>=0} (-1)^k a_k
/// from a_0..a_{n-1}.
Real cvz_sum(std::span<const Real> a);

}  // namespace mzvkit

#endif  // MZVKIT_NUMERICS_HPP
