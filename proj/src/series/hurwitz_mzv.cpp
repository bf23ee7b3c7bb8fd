#include <mzvkit/series.hpp>
#include <mzvkit/detail/asymptotic_series.hpp>

#include <memory>
#include <sstream>

namespace mzvkit {

using detail::AsymptoticSeries;
using detail::Link;
using detail::NestedLevel;

std::string to_string(ParamFamily f) { return f == ParamFamily::lemma1 ? "lemma1" : "theorem2"; }
std::string to_string(Side s) { return s == Side::lhs ? "lhs" : "rhs"; }

namespace {

void require_tolerance(const SeriesValue& v, const PrecisionContext& ctx, const std::string& what) {
  if (v.value.err > Real(ctx.target_tolerance)) {
    std::ostringstream os;
    os << what << ": error estimate " << static_cast<double>(v.value.err)
       << " exceeds tolerance " << ctx.target_tolerance;
    throw NonConvergenceError(os.str(), static_cast<double>(v.value.err));
  }
}

}  // namespace

SeriesValue eval_hurwitz_sum(const std::vector<int>& parts, const Real& alpha, bool strict,
                             const PrecisionContext& ctx) {
  ctx.validate();
  if (parts.empty() || parts.back() < 2) throw DomainError("hurwitz sum: last exponent < 2");
  if (!(alpha > 0)) throw DomainError("hurwitz sum: shift must be positive");
  PrecisionGuard guard(ctx);
  const Real a(alpha);
  const int P = detail::series_order();
  std::vector<NestedLevel> levels;
  for (int k : parts) {
    if (k < 1) throw DomainError("hurwitz sum: exponents must be positive");
    levels.push_back({[a, k](long m) { return pow(a + m, -k); },
                      AsymptoticSeries::power(Real(k), a, P)});
  }
  std::vector<Link> links(parts.size() - 1, strict ? Link::strict : Link::weak);
  SeriesValue out;
  out.value = detail::nested_sum_with_error(levels, links, out.terms_used);
  out.method = "split-tail";
  require_tolerance(out, ctx, "hurwitz sum");
  return out;
}

SeriesValue eval_hurwitz_mzv(const HurwitzIndex& h, Side side, const PrecisionContext& ctx) {
  h.validate();
  if (side == Side::lhs) {
    PrecisionGuard guard(ctx);
    return eval_hurwitz_sum(h.parts, to_real(h.alpha), true, ctx);
  }
  ctx.validate();
  PrecisionGuard guard(ctx);
  const MultiIndex dual = dual_index(make_index(h.parts));
  const Real alpha = to_real(h.alpha);
  const int P = detail::series_order();
  const long need = detail::default_cutoff() * 2 + 2;

  // w(m) = (m+1)! / (alpha)_{m+1}
  auto w = std::make_shared<std::vector<Real>>();
  w->reserve(static_cast<std::size_t>(need));
  Real cur = 1 / alpha;
  for (long m = 0; m < need; ++m) {
    w->push_back(cur);
    cur = cur * (m + 2) / (alpha + m + 1);
  }

  std::vector<NestedLevel> levels;
  const int q = dual.depth();
  for (int i = 0; i < q; ++i) {
    const int k = dual.parts[i];
    auto shape = AsymptoticSeries::power(Real(k), Real(1), P);
    if (i + 1 < q) {
      levels.push_back({[k](long m) { return pow(Real(m + 1), -k); }, shape});
    } else {
      shape = shape * AsymptoticSeries::gamma_ratio({Real(2)}, {1 + alpha}, P);
      levels.push_back({[k, w](long m) { return pow(Real(m + 1), -k) * w->at(m); }, shape});
    }
  }
  std::vector<Link> links(static_cast<std::size_t>(q - 1), Link::strict);
  SeriesValue out;
  out.value = detail::nested_sum_with_error(levels, links, out.terms_used);
  out.method = "split-tail";
  require_tolerance(out, ctx, "hurwitz duality rhs");
  return out;
}

}  // namespace mzvkit
