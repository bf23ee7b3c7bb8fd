#ifndef MZVKIT_SERIES_HPP
#define MZVKIT_SERIES_HPP

#include <mzvkit/indices.hpp>
#include <mzvkit/numerics.hpp>

#include <string>
#include <vector>

namespace mzvkit {

enum class SeriesMethod { auto_select, direct, levin, cvz };

std::string to_string(SeriesMethod m);
/// "auto" | "direct" | "levin" | "cvz"; throws std::invalid_argument.
SeriesMethod parse_method(const std::string& name);

struct EvalOptions {
  SeriesMethod method = SeriesMethod::auto_select;
  long max_terms = 200000;
  bool use_cache = true;
};

struct SeriesValue {
  BigReal value;
  long terms_used = 0;
  std::string method;
};

/// Value of the strict or non-strict multiple polylogarithm at z = sign.
/// Throws NonConvergenceError when err exceeds ctx.target_tolerance.
SeriesValue eval_mpl(const MultiIndex& k, const PrecisionContext& ctx,
                     const EvalOptions& opts = {});

/// Partial sums of the outermost variable, m_n = 1..M (no acceleration).
std::vector<Real> mpl_partial_sums(const MultiIndex& k, long M);

void clear_value_cache();

/// Li_k(1/2) for k >= 0.
BigReal polylog_half(int k, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Theorem A
// ---------------------------------------------------------------------------
struct TheoremAParams {
  Rational a;
  std::vector<Rational> b;  // b_1..b_{s+1}
  std::vector<Rational> c;  // c_1..c_{s+1}
  int s = 1;

  void validate_shape() const;
};

struct TheoremAConditions {
  Rational c1_margin;
  /// Minimum over r = 2..s+1 and all choice vectors.
  Rational c2_margin;
  bool c1 = false;
  bool c2 = false;
  /// 1+a-b_i and 1+a-c_i avoid the non-positive integers.
  bool poles = false;

  bool ok() const { return c1 && c2 && poles; }
};

TheoremAConditions check_theorem_a_conditions(const TheoremAParams& p);

/// The 2s+4 F 2s+3 series at -1.
SeriesValue eval_theorem_a_lhs(const TheoremAParams& p, const PrecisionContext& ctx);
/// Gamma prefactor times the s-fold sum over l_1..l_s.
SeriesValue eval_theorem_a_rhs(const TheoremAParams& p, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// One-parameter families and their alpha-derivatives
// ---------------------------------------------------------------------------
enum class ParamFamily { lemma1, theorem2 };
enum class Side { lhs, rhs };

std::string to_string(ParamFamily f);
std::string to_string(Side s);

/// (-1)^r / r! d^r/dalpha^r of the chosen side, from exact Pochhammer
/// derivative expansions.
///   lemma1:   2 sum_m (2a-1)_{m+1}/m! (-1)^m (m+a)^(-2s-1)
///             = Gamma(a)^2/Gamma(2a-1) sum_{m_1<=...<=m_s} prod (m_i+a)^(-2)
///   theorem2: sum_m m!/(a)_{m+1} (2m+a+1) (-1)^m / ((m+a)^s (m+1)^s)
///             = sum_{m_1<=...<=m_s} (m_1+a)^(-2) prod_{i>=2} 1/((m_i+a)(m_i+1))
SeriesValue eval_param_series(ParamFamily family, const Rational& alpha, int s, Side side,
                              int r, const PrecisionContext& ctx);

/// sum_{0 <= m_1 R ... R m_n} prod (m_i + alpha)^(-k_i), R strict or weak.
SeriesValue eval_hurwitz_sum(const std::vector<int>& parts, const Real& alpha, bool strict,
                             const PrecisionContext& ctx);

/// Sides of the Hurwitz duality: lhs is the strict Hurwitz sum of h, rhs is
/// the dual-index sum weighted by (m_q + 1)! / (alpha)_{m_q + 1}.
SeriesValue eval_hurwitz_mzv(const HurwitzIndex& h, Side side, const PrecisionContext& ctx);

}  // namespace mzvkit

#endif  // MZVKIT_SERIES_HPP
