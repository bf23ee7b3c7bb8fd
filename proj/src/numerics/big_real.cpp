#include <mzvkit/numerics.hpp>

namespace mzvkit {

namespace {
Real rounding(const Real& v) { return abs(v) * epsilon_at(current_digits() - 1); }
}  // namespace

BigReal::BigReal() : value(0), err(0) {}
BigReal::BigReal(Real v, Real e) : value(std::move(v)), err(abs(e)) {}

BigReal operator+(const BigReal& x, const BigReal& y) {
  Real v = x.value + y.value;
  return {v, x.err + y.err + rounding(v)};
}

BigReal operator-(const BigReal& x, const BigReal& y) {
  Real v = x.value - y.value;
  return {v, x.err + y.err + rounding(v)};
}

BigReal operator-(const BigReal& x) { return {-x.value, x.err}; }

BigReal operator*(const BigReal& x, const BigReal& y) {
  Real v = x.value * y.value;
  return {v, abs(x.value) * y.err + abs(y.value) * x.err + x.err * y.err + rounding(v)};
}

BigReal operator/(const BigReal& x, const BigReal& y) {
  if (y.value == 0) throw DomainError("division by zero");
  Real ay = abs(y.value);
  if (y.err >= ay) throw DomainError("divisor error bound includes zero");
  Real v = x.value / y.value;
  // |x/y - x'/y'| <= (ex + |v| ey) / (|y| - ey)
  return {v, (x.err + abs(v) * y.err) / (ay - y.err) + rounding(v)};
}

BigReal& operator+=(BigReal& x, const BigReal& y) { return x = x + y; }
BigReal& operator-=(BigReal& x, const BigReal& y) { return x = x - y; }
BigReal& operator*=(BigReal& x, const BigReal& y) { return x = x * y; }

BigReal scale(const BigReal& x, const Rational& q) {
  Real f = to_real(q);
  Real v = x.value * f;
  return {v, x.err * abs(f) + rounding(v)};
}

BigReal pow(const BigReal& x, int n) {
  if (n < 0) return BigReal(Real(1)) / pow(x, -n);
  BigReal r(Real(1));
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

}  // namespace mzvkit
