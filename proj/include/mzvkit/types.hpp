#ifndef MZVKIT_TYPES_HPP
#define MZVKIT_TYPES_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <mutex>
#include <stdexcept>
#include <string>

namespace mzvkit {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a series or extrapolation cannot reach the requested tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// Working precision and requested absolute error for one evaluation.
///
/// `decimal_digits` is the precision the caller wants reported; evaluators
/// run internally with `guard_digits` extra digits.
struct PrecisionContext {
  int decimal_digits = 40;
  double target_tolerance = 1e-12;

  static constexpr int guard_digits = 12;

  int working_digits() const noexcept { return decimal_digits + guard_digits; }
  /// Throws std::invalid_argument unless digits >= 20 and the tolerance is
  /// no finer than 10^(10 - digits).
  void validate() const;
};

/// Applies a PrecisionContext to the process-wide MPFR default precision for
/// the lifetime of the guard. Guards nest; a recursive mutex serializes
/// evaluations running at different precisions.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(const PrecisionContext& ctx);
  explicit PrecisionGuard(int digits10);
  ~PrecisionGuard();

  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned previous_;
};

/// Current MPFR working precision in decimal digits.
int current_digits();

/// 10^(-digits) at the current working precision.
Real epsilon_at(int digits);

Real to_real(const Rational& q);
Real to_real(const Integer& z);

std::string to_string(const Rational& q);
/// Scientific notation with `digits` significant digits.
std::string to_decimal_string(const Real& x, int digits);

}  // namespace mzvkit

#endif  // MZVKIT_TYPES_HPP
