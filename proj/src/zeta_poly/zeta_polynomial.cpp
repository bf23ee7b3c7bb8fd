#include <mzvkit/zeta_poly.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mzvkit {

ZetaMonomial::ZetaMonomial(std::vector<int> f, int pi) : factors(std::move(f)), pi_power(pi) {
  for (int k : factors) {
    if (k < 2) throw DomainError("zeta monomial: symbol zeta(" + std::to_string(k) + ")");
  }
  if (pi < 0 || pi % 2 != 0) throw DomainError("zeta monomial: pi power must be even");
  std::sort(factors.begin(), factors.end());
}

int ZetaMonomial::weight() const {
  return std::accumulate(factors.begin(), factors.end(), 0) + pi_power;
}

std::string ZetaMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (pi_power > 0) {
    os << "pi^" << pi_power;
    first = false;
  }
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!first) os << '*';
    first = false;
    os << 'z' << factors[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

bool operator<(const ZetaMonomial& x, const ZetaMonomial& y) {
  const int wx = x.weight();
  const int wy = y.weight();
  if (wx != wy) return wx < wy;
  if (x.factors != y.factors) return x.factors < y.factors;
  return x.pi_power < y.pi_power;
}

bool operator==(const ZetaMonomial& x, const ZetaMonomial& y) {
  return x.factors == y.factors && x.pi_power == y.pi_power;
}

ZetaPolynomial::ZetaPolynomial(const Rational& c) { add_term(ZetaMonomial(), c); }

ZetaPolynomial::ZetaPolynomial(const ZetaMonomial& m, const Rational& c) { add_term(m, c); }

ZetaPolynomial ZetaPolynomial::zeta(int k) { return ZetaPolynomial(ZetaMonomial({k})); }

ZetaPolynomial ZetaPolynomial::pi(int power) { return ZetaPolynomial(ZetaMonomial({}, power)); }

Rational ZetaPolynomial::coefficient(const ZetaMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ZetaPolynomial::add_term(const ZetaMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

ZetaPolynomial& ZetaPolynomial::operator+=(const ZetaPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ZetaPolynomial& ZetaPolynomial::operator-=(const ZetaPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ZetaPolynomial& ZetaPolynomial::operator*=(const ZetaPolynomial& other) {
  ZetaPolynomial out;
  for (const auto& [mx, cx] : terms_) {
    for (const auto& [my, cy] : other.terms_) {
      std::vector<int> f = mx.factors;
      f.insert(f.end(), my.factors.begin(), my.factors.end());
      out.add_term(ZetaMonomial(std::move(f), mx.pi_power + my.pi_power), cx * cy);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

ZetaPolynomial& ZetaPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string ZetaPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string body = m.to_string();
    if (body.empty()) {
      os << mzvkit::to_string(mag);
    } else if (mag == 1) {
      os << body;
    } else {
      os << mzvkit::to_string(mag) << '*' << body;
    }
  }
  return os.str();
}

ZetaPolynomial operator+(ZetaPolynomial x, const ZetaPolynomial& y) { return x += y; }
ZetaPolynomial operator-(ZetaPolynomial x, const ZetaPolynomial& y) { return x -= y; }
ZetaPolynomial operator-(const ZetaPolynomial& x) { return x * Rational(-1); }
ZetaPolynomial operator*(const ZetaPolynomial& x, const ZetaPolynomial& y) {
  ZetaPolynomial out = x;
  return out *= y;
}
ZetaPolynomial operator*(ZetaPolynomial x, const Rational& c) { return x *= c; }
ZetaPolynomial operator*(const Rational& c, ZetaPolynomial x) { return x *= c; }
bool operator==(const ZetaPolynomial& x, const ZetaPolynomial& y) { return x.terms() == y.terms(); }
bool operator!=(const ZetaPolynomial& x, const ZetaPolynomial& y) { return !(x == y); }

BigReal zp_eval(const ZetaPolynomial& p, const PrecisionContext& ctx) {
  ctx.validate();
  PrecisionGuard guard(ctx);
  const Real pi = pi_constant();
  BigReal total;
  for (const auto& [m, c] : p.terms()) {
    BigReal t(to_real(c));
    if (m.pi_power > 0) t = t * BigReal(pow(pi, m.pi_power), epsilon_at(current_digits() - 1));
    for (int k : m.factors) t = t * zeta_value(k);
    total += t;
  }
  return total;
}

ZetaPolynomial euler_reduce(const ZetaPolynomial& p) {
  ZetaPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    Rational coef = c;
    int pi = m.pi_power;
    std::vector<int> odd;
    for (int k : m.factors) {
      if (k % 2 == 0) {
        const auto e = zeta_even_exact(k / 2);
        coef *= e.coefficient;
        pi += e.pi_power;
      } else {
        odd.push_back(k);
      }
    }
    out += ZetaPolynomial(ZetaMonomial(std::move(odd), pi), coef);
  }
  return out;
}

}  // namespace mzvkit
