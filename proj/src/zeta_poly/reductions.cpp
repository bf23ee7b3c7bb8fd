#include <mzvkit/indices.hpp>
#include <mzvkit/zeta_poly.hpp>

namespace mzvkit {

ZetaPolynomial hoffman_symmetric_reduce(const std::vector<int>& exponents,
                                        SymmetricVariant variant) {
  if (exponents.empty()) return ZetaPolynomial(Rational(1));
  if (exponents.size() > 6) throw DomainError("symmetric reduction: at most 6 exponents");
  for (int k : exponents) {
    if (k < 2) throw DomainError("symmetric reduction: exponents must be >= 2");
  }
  ZetaPolynomial out;
  for (const auto& part : set_partitions(static_cast<int>(exponents.size()))) {
    Rational coef(1);
    std::vector<int> factors;
    for (const auto& block : part.blocks) {
      int w = 0;
      for (int i : block) w += exponents[static_cast<std::size_t>(i - 1)];
      factors.push_back(w);
      const long n = static_cast<long>(block.size());
      Rational c(factorial(n - 1));
      if (variant == SymmetricVariant::strict && n % 2 == 0) c = -c;
      coef *= c;
    }
    out += ZetaPolynomial(ZetaMonomial(std::move(factors)), coef);
  }
  return out;
}

ZetaPolynomial lemma2_reduce(int r, int k, int q, int s, Lemma2Weight weight) {
  if (r < 0 || k < 1 || q < 0) throw DomainError("lemma2_reduce: bad parameters");
  if (s < 2) throw DomainError("lemma2_reduce: s must be >= 2");
  ZetaPolynomial out;
  for (const auto& comp : compositions(r, k)) {
    Rational f(1);
    std::vector<int> exps;
    for (int ri : comp.parts) {
      if (weight == Lemma2Weight::product_r_plus_1) f *= ri + 1;
      exps.push_back(q * ri + s);
    }
    out += hoffman_symmetric_reduce(exps, SymmetricVariant::star) * f;
  }
  return out * Rational(1, factorial(k));
}

GammaRatioExpansion gamma_ratio_coeffs(int order) {
  if (order < 0 || order > max_gamma_order) {
    throw DomainError("gamma_ratio_coeffs: order must be in 0.." + std::to_string(max_gamma_order));
  }
  // g(x) = sum_{n>=2} (-1)^(n+1) zeta(n) (2^n - 2)/n x^n, coefficients of exp(g).
  std::vector<ZetaPolynomial> g(static_cast<std::size_t>(order) + 1);
  for (int n = 2; n <= order; ++n) {
    Rational c = Rational((Integer(1) << n) - 2, n);
    if (n % 2 == 0) c = -c;
    g[n] = ZetaPolynomial::zeta(n) * c;
  }
  GammaRatioExpansion out;
  out.coeffs.resize(static_cast<std::size_t>(order) + 1);
  out.coeffs[0] = ZetaPolynomial(Rational(1));
  for (int n = 1; n <= order; ++n) {
    ZetaPolynomial acc;
    for (int k = 2; k <= n; ++k) acc += g[k] * out.coeffs[n - k] * Rational(k);
    out.coeffs[n] = acc * Rational(1, n);
  }
  return out;
}

}  // namespace mzvkit
