#ifndef MZVKIT_DETAIL_CHECKS_HPP
#define MZVKIT_DETAIL_CHECKS_HPP

#include <mzvkit/indices.hpp>
#include <mzvkit/series.hpp>
#include <mzvkit/suite.hpp>
#include <mzvkit/zeta_poly.hpp>

#include <string>
#include <utility>
#include <vector>

namespace mzvkit::detail {

long param_int(const Params& p, const std::string& name);
Rational param_rational(const Params& p, const std::string& name);
std::string param_choice(const Params& p, const std::string& name);

/// Cartesian product of named value lists, last name varying fastest.
std::vector<Params> grid(const std::vector<std::pair<std::string, std::vector<ParamValue>>>& axes);
std::vector<ParamValue> int_range(long lo, long hi);
std::vector<ParamValue> choices(const std::vector<std::string>& names);

/// eval_mpl value for an index given as parts.
BigReal mpl(const std::vector<int>& parts, bool strict, int sign, const PrecisionContext& ctx);
inline BigReal zeta_star(const std::vector<int>& parts, const PrecisionContext& ctx) {
  return mpl(parts, false, 1, ctx);
}

/// {a}^n followed by the rest.
std::vector<int> repeated(int a, int n, std::vector<int> rest = {});

BigReal to_big(const Rational& q);

SideValue approx(const BigReal& x);
SideValue exact(const Rational& q);

/// Parameter packs of the two one-parameter families and their scale
/// factors against the one-parameter identities.
TheoremAParams lemma1_pack(const Rational& alpha, int s);
TheoremAParams theorem2_pack(const Rational& alpha, int s);
Rational lemma1_scale(const Rational& alpha, int s);
Rational theorem2_scale(const Rational& alpha, int s);

/// Deterministic random pack number `seed` with condition margins >= 1/2.
TheoremAParams random_pack(int seed, int s);

void register_application1(std::vector<CheckSpec>& out);
void register_application2(std::vector<CheckSpec>& out);
void register_foundations(std::vector<CheckSpec>& out);

/// Shared evaluators of the {2,3}-basis chain.
Evaluation eval_eq16(int s, Theorem3Variant v, const PrecisionContext& ctx);
Evaluation eval_eq18(int s, const PrecisionContext& ctx);
Evaluation eval_eq20(int s, const PrecisionContext& ctx);
Evaluation eval_eq21(int s, const PrecisionContext& ctx);
Evaluation eval_eq21_telescope(int s, int t, const PrecisionContext& ctx);

/// Shared evaluator of the alternating sums.
Evaluation eval_theorem1(int r, int s, Theorem1Sum which, const PrecisionContext& ctx);

}  // namespace mzvkit::detail

#endif  // MZVKIT_DETAIL_CHECKS_HPP
