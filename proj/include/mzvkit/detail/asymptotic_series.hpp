#ifndef MZVKIT_DETAIL_ASYMPTOTIC_SERIES_HPP
#define MZVKIT_DETAIL_ASYMPTOTIC_SERIES_HPP

#include <mzvkit/numerics.hpp>

#include <functional>
#include <vector>

namespace mzvkit::detail {

/// Formal expansion x^(-beta) * sum_{p<P} c_p x^(-p) for large x.
class AsymptoticSeries {
 public:
  AsymptoticSeries(Real beta, std::vector<Real> coeffs, int order);

  /// (x + shift)^(-k)
  static AsymptoticSeries power(const Real& k, const Real& shift, int order);
  /// prod Gamma(x + num_i) / prod Gamma(x + den_i), up to a constant factor;
  /// needs as many numerator as denominator parameters.
  static AsymptoticSeries gamma_ratio(const std::vector<Real>& num, const std::vector<Real>& den,
                                      int order);
  static AsymptoticSeries one(int order);

  const Real& beta() const { return beta_; }
  const std::vector<Real>& coeffs() const { return c_; }
  int order() const { return static_cast<int>(c_.size()); }

  Real operator()(const Real& x) const;

  AsymptoticSeries operator*(const AsymptoticSeries& other) const;
  AsymptoticSeries scaled(const Real& f) const;
  /// Rescales so that the series equals `exact` at x.
  AsymptoticSeries normalized(const Real& x, const Real& exact) const;
  /// f(x + h)
  AsymptoticSeries shifted(const Real& h) const;
  /// sum_{m >= x, m - x integer} f(m) by Euler-Maclaurin; needs beta > 1.
  AsymptoticSeries tail_sum() const;
  /// sum_{l >= 0} (e)_l / l! f(x + l); needs beta > e > 0.
  AsymptoticSeries binomial_transform(const Real& e) const;

 private:
  Real beta_;
  std::vector<Real> c_;
};

/// Truncated power series helpers, f_0 = 1 for log, g_0 = 0 for exp.
std::vector<Real> series_log(const std::vector<Real>& f);
std::vector<Real> series_exp(const std::vector<Real>& g);

enum class Link { strict, weak };

/// One level of a nested sum over m >= 0: exact values and the large-m shape.
struct NestedLevel {
  std::function<Real(long)> value;
  AsymptoticSeries shape;
};

/// sum over 0 <= m_1 R_1 m_2 R_2 ... m_n of prod f_i(m_i), with R_i given by
/// links (size n - 1). Variables below `cutoff` are summed exactly; the
/// remainder comes from the shapes.
Real nested_sum(const std::vector<NestedLevel>& levels, const std::vector<Link>& links,
                long cutoff);

/// nested_sum at the default cutoff N and at 3N/2; the value is the second,
/// the error their difference plus a rounding floor.
BigReal nested_sum_with_error(const std::vector<NestedLevel>& levels,
                              const std::vector<Link>& links, long& terms_used);

/// Working parameters chosen from the current precision.
int series_order();
long default_cutoff();

/// sum_{m>=0} (-1)^m a_m from a_0..a_{K-1}: the first `head` terms exactly,
/// CVZ over the rest. The error is ten times the change from dropping one
/// CVZ term.
BigReal alternating_sum(std::span<const Real> a, long head);
inline constexpr long alternating_head = 30;
long cvz_terms();

}  // namespace mzvkit::detail

#endif  // MZVKIT_DETAIL_ASYMPTOTIC_SERIES_HPP
