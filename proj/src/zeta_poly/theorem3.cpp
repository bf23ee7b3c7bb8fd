#include <mzvkit/zeta_poly.hpp>

namespace mzvkit {

std::string to_string(Theorem3Variant v) {
  switch (v) {
    case Theorem3Variant::eq17: return "eq17";
    case Theorem3Variant::eq22: return "eq22";
    case Theorem3Variant::proof_chain: return "proof_chain";
  }
  return "proof_chain";
}

Theorem3Variant parse_theorem3_variant(const std::string& name) {
  if (name == "eq17") return Theorem3Variant::eq17;
  if (name == "eq22") return Theorem3Variant::eq22;
  if (name == "proof_chain") return Theorem3Variant::proof_chain;
  throw std::invalid_argument("unknown coefficient variant '" + name + "'");
}

namespace {

// 1 - 2^(1-2n), n >= 0
Rational eta(int n) {
  if (n == 0) return Rational(-1);
  return 1 - Rational(Integer(1), Integer(1) << (2 * n - 1));
}

void require_positive(int s) {
  if (s < 1) throw DomainError("s must be positive");
}

}  // namespace

Rational theorem3_bernoulli_sum(int s) {
  require_positive(s);
  const int n = s + 1;
  const Rational denom = bernoulli(2 * n) * eta(n);
  Rational x(0);
  for (int i = 0; i <= s - 1; ++i) {
    const int j = s - 1 - i;
    x += binomial(2 * n, 2 * (i + 2)) * bernoulli(2 * (i + 2)) * bernoulli(2 * j) * eta(j);
  }
  return x / denom;
}

Rational theorem3_coefficient(int s, Theorem3Variant variant) {
  require_positive(s);
  const int n = s + 1;
  const Rational base(2 * s * (s + 1), 3);
  switch (variant) {
    case Theorem3Variant::proof_chain:
      return base + Rational(2, 3) * theorem3_bernoulli_sum(s);
    case Theorem3Variant::eq17: {
      Rational sum(0);
      for (int i = 2; i <= n; ++i) {
        sum += binomial(2 * n, 2 * i) * bernoulli(2 * (n - i)) * bernoulli(2 * i) * eta(i);
      }
      return base + Rational(2, 3) * sum / (bernoulli(2 * n) * eta(n));
    }
    case Theorem3Variant::eq22: {
      const Rational e = eta(n);
      return Rational(2, 3) * (Rational(s * (s - 1) - 1) + 1 / e) -
             Rational((s + 1) * (2 * s + 1), 18) / e * bernoulli(2 * s) / bernoulli(2 * n);
    }
  }
  return Rational(0);
}

Rational bernoulli_identity_check(int s) {
  require_positive(s);
  const int n = s + 1;
  Rational lhs(0);
  for (int i = 2; i <= n; ++i) {
    lhs += binomial(2 * n, 2 * i) * bernoulli(2 * (n - i)) * bernoulli(2 * i) * eta(i);
  }
  const Rational rhs = (1 - (2 * s + 1) * eta(n)) * bernoulli(2 * n) -
                       Rational((s + 1) * (2 * s + 1), 12) * bernoulli(2 * s);
  return lhs - rhs;
}

}  // namespace mzvkit
