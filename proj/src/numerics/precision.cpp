#include <mzvkit/types.hpp>

#include <cmath>
#include <sstream>

namespace mzvkit {

namespace {
std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}
}  // namespace

void PrecisionContext::validate() const {
  if (decimal_digits < 20) {
    throw std::invalid_argument("precision must be at least 20 decimal digits");
  }
  if (!(target_tolerance > 0) || !std::isfinite(target_tolerance)) {
    throw std::invalid_argument("tolerance must be a positive finite number");
  }
  // Compare in log space; 10^(10-digits) underflows a double for large digits.
  if (std::log10(target_tolerance) < 10.0 - decimal_digits - 1e-9) {
    throw std::invalid_argument("tolerance is finer than the working precision supports");
  }
}

PrecisionGuard::PrecisionGuard(const PrecisionContext& ctx)
    : PrecisionGuard(ctx.working_digits()) {}

PrecisionGuard::PrecisionGuard(int digits10)
    : lock_(precision_mutex()), previous_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(digits10));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(previous_); }

int current_digits() { return static_cast<int>(Real::default_precision()); }

Real epsilon_at(int digits) { return boost::multiprecision::pow(Real(10), -digits); }

Real to_real(const Rational& q) {
  return Real(Real(boost::multiprecision::numerator(q)) /
              Real(boost::multiprecision::denominator(q)));
}

Real to_real(const Integer& z) { return Real(z); }

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) {
    os << '/' << boost::multiprecision::denominator(q);
  }
  return os.str();
}

std::string to_decimal_string(const Real& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

}  // namespace mzvkit
