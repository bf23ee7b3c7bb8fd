#ifndef MZVKIT_ZETA_POLY_HPP
#define MZVKIT_ZETA_POLY_HPP

#include <mzvkit/numerics.hpp>

#include <map>
#include <string>
#include <vector>

namespace mzvkit {

/// Product of formal zeta(k) symbols (k >= 2, kept sorted) and pi^pi_power.
struct ZetaMonomial {
  std::vector<int> factors;
  int pi_power = 0;

  ZetaMonomial() = default;
  explicit ZetaMonomial(std::vector<int> f, int pi = 0);

  int weight() const;
  /// "z2^2*z3", "pi^4"; empty for the unit monomial.
  std::string to_string() const;
};

/// Canonical order: total weight, then factors lexicographically, then the
/// pi power.
bool operator<(const ZetaMonomial& x, const ZetaMonomial& y);
bool operator==(const ZetaMonomial& x, const ZetaMonomial& y);

/// Sparse polynomial over Q in the zeta symbols. Zero coefficients are
/// never stored, so equal polynomials compare equal.
class ZetaPolynomial {
 public:
  using Terms = std::map<ZetaMonomial, Rational>;

  ZetaPolynomial() = default;
  ZetaPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  ZetaPolynomial(const ZetaMonomial& m, const Rational& c = Rational(1));

  static ZetaPolynomial zeta(int k);
  static ZetaPolynomial pi(int power);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ZetaMonomial& m) const;

  ZetaPolynomial& operator+=(const ZetaPolynomial& other);
  ZetaPolynomial& operator-=(const ZetaPolynomial& other);
  ZetaPolynomial& operator*=(const ZetaPolynomial& other);
  ZetaPolynomial& operator*=(const Rational& c);

  /// "1/2*z2^2 - 7/2*z4"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void add_term(const ZetaMonomial& m, const Rational& c);

  Terms terms_;
};

ZetaPolynomial operator+(ZetaPolynomial x, const ZetaPolynomial& y);
ZetaPolynomial operator-(ZetaPolynomial x, const ZetaPolynomial& y);
ZetaPolynomial operator-(const ZetaPolynomial& x);
ZetaPolynomial operator*(const ZetaPolynomial& x, const ZetaPolynomial& y);
ZetaPolynomial operator*(ZetaPolynomial x, const Rational& c);
ZetaPolynomial operator*(const Rational& c, ZetaPolynomial x);
bool operator==(const ZetaPolynomial& x, const ZetaPolynomial& y);
bool operator!=(const ZetaPolynomial& x, const ZetaPolynomial& y);

/// Numerical value at the working precision of `ctx`.
BigReal zp_eval(const ZetaPolynomial& p, const PrecisionContext& ctx);

/// Every even zeta(2s) replaced by its rational multiple of pi^(2s).
ZetaPolynomial euler_reduce(const ZetaPolynomial& p);

enum class SymmetricVariant { strict, star };

/// sum over all k! orderings sigma of zeta(k_sigma(1), ..., k_sigma(n)) (or
/// zeta-star), as a polynomial in single zeta values via set partitions.
/// Exponents must be >= 2; at most 6 of them.
ZetaPolynomial hoffman_symmetric_reduce(const std::vector<int>& exponents,
                                        SymmetricVariant variant);

enum class Lemma2Weight { one, product_r_plus_1 };

/// sum over (r_1..r_k) with r_1+..+r_k = r of f(r) zeta-star(q r_1 + s, ..., q r_k + s)
/// with f = 1 or prod (r_i+1), through the symmetric reduction.
ZetaPolynomial lemma2_reduce(int r, int k, int q, int s, Lemma2Weight weight);

/// Taylor coefficients at alpha = 1 of Gamma(alpha)^2 / Gamma(2 alpha - 1),
/// coeffs[i] = (1/i!) d^i/d alpha^i. order <= 12.
struct GammaRatioExpansion {
  std::vector<ZetaPolynomial> coeffs;
};
GammaRatioExpansion gamma_ratio_coeffs(int order);
constexpr int max_gamma_order = 12;

enum class Theorem3Variant { eq17, eq22, proof_chain };
std::string to_string(Theorem3Variant v);
Theorem3Variant parse_theorem3_variant(const std::string& name);

/// The coefficient c(s) of zeta-star({2}^(s+1)) in the expression of
/// zeta-star(4, {2}^(s-1)), under each of the three closed forms.
Rational theorem3_coefficient(int s, Theorem3Variant variant);

/// The Bernoulli sum X(s) with
/// sum_i zeta-star({2}^(i-1), 4, {2}^(s-i)) = -X(s)/2 * zeta-star({2}^(s+1)).
Rational theorem3_bernoulli_sum(int s);

/// lhs - rhs of the Bernoulli-number identity linking the two closed forms.
Rational bernoulli_identity_check(int s);

}  // namespace mzvkit

#endif  // MZVKIT_ZETA_POLY_HPP
