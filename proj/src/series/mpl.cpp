#include <mzvkit/series.hpp>
#include <mzvkit/detail/asymptotic_series.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace mzvkit {

using detail::AsymptoticSeries;
using detail::Link;
using detail::NestedLevel;

std::string to_string(SeriesMethod m) {
  switch (m) {
    case SeriesMethod::auto_select: return "auto";
    case SeriesMethod::direct: return "direct";
    case SeriesMethod::levin: return "levin";
    case SeriesMethod::cvz: return "cvz";
  }
  return "auto";
}

SeriesMethod parse_method(const std::string& name) {
  if (name == "auto") return SeriesMethod::auto_select;
  if (name == "direct") return SeriesMethod::direct;
  if (name == "levin") return SeriesMethod::levin;
  if (name == "cvz") return SeriesMethod::cvz;
  throw std::invalid_argument("unknown method '" + name + "'");
}

namespace {

std::mutex cache_mutex;
std::map<std::string, SeriesValue>& value_cache() {
  static std::map<std::string, SeriesValue> cache;
  return cache;
}

void require_tolerance(const SeriesValue& v, const PrecisionContext& ctx, const std::string& what) {
  if (v.value.err > Real(ctx.target_tolerance)) {
    std::ostringstream os;
    os << what << ": error estimate " << static_cast<double>(v.value.err)
       << " exceeds tolerance " << ctx.target_tolerance << " (method " << v.method << ", "
       << v.terms_used << " terms)";
    throw NonConvergenceError(os.str(), static_cast<double>(v.value.err));
  }
}

Real inv_power(long m, int k) { return pow(Real(m), -k); }

// Outer terms A(m) m^(-k_n), m = 1..M, before the sign z^(m-1).
std::vector<Real> outer_terms(const MultiIndex& k, long M) {
  const int n = k.depth();
  // S[j]: sum over the first j variables, the last one < m (strict) or <= m.
  std::vector<Real> S(static_cast<std::size_t>(n), Real(0));
  std::vector<Real> prev;
  S[0] = 1;
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(M));
  for (long m = 1; m <= M; ++m) {
    if (k.strict) {
      prev = S;
      out.push_back(S[n - 1] * inv_power(m, k.parts[n - 1]));
      for (int j = 1; j < n; ++j) S[j] += prev[j - 1] * inv_power(m, k.parts[j - 1]);
    } else {
      for (int j = 1; j < n; ++j) S[j] += S[j - 1] * inv_power(m, k.parts[j - 1]);
      out.push_back(S[n - 1] * inv_power(m, k.parts[n - 1]));
    }
  }
  return out;
}

std::vector<Real> partial_sums(const MultiIndex& k, long M) {
  auto t = outer_terms(k, M);
  Real acc(0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    acc += (k.sign < 0 && i % 2 == 1) ? -t[i] : t[i];
    t[i] = acc;
  }
  return t;
}

SeriesValue split_tail(const MultiIndex& k) {
  const int P = detail::series_order();
  std::vector<NestedLevel> levels;
  for (int part : k.parts) {
    levels.push_back({[part](long m) { return inv_power(m + 1, part); },
                      AsymptoticSeries::power(Real(part), Real(1), P)});
  }
  std::vector<Link> links(levels.size() - 1, k.strict ? Link::strict : Link::weak);
  SeriesValue out;
  out.value = detail::nested_sum_with_error(levels, links, out.terms_used);
  out.method = "split-tail";
  return out;
}

SeriesValue alternating_cvz(const MultiIndex& k, long max_terms) {
  const long head = detail::alternating_head;
  const long K = head + detail::cvz_terms();
  if (K > max_terms) throw NonConvergenceError("term cap below the CVZ requirement", INFINITY);
  const auto a = outer_terms(k, K);
  SeriesValue out;
  out.value = detail::alternating_sum(a, head);
  out.terms_used = K;
  out.method = "cvz";
  return out;
}

SeriesValue direct(const MultiIndex& k, long max_terms) {
  const long M = std::max<long>(max_terms, 8);
  const auto sums = partial_sums(k, M);
  SeriesValue out;
  out.terms_used = M;
  out.method = "direct";
  const Real& v = sums.back();
  if (k.sign < 0) {
    // Alternating: bounded by the first omitted term.
    out.value = BigReal(v, abs(v - sums[sums.size() - 2]));
  } else {
    const int kn = k.parts.back();
    const Real tail = v * pow(Real(M), 1 - kn) / (kn - 1) *
                      pow(1 + log(Real(M)), k.depth() - 1);
    out.value = BigReal(v, tail);
  }
  return out;
}

SeriesValue levin(const MultiIndex& k, long max_terms, const PrecisionContext& ctx) {
  const long K = std::min<long>(max_terms, std::max(12, current_digits() * 3 / 4));
  const auto sums = partial_sums(k, K);
  SeriesValue out;
  out.terms_used = K;
  out.method = "levin-u";
  out.value = accelerate(sums, AccelerationScheme::levin_u, ctx);
  return out;
}

}  // namespace

std::vector<Real> mpl_partial_sums(const MultiIndex& k, long M) {
  if (!k.admissible()) throw DomainError("inadmissible index " + k.to_string());
  return partial_sums(k, M);
}

void clear_value_cache() {
  std::lock_guard lock(cache_mutex);
  value_cache().clear();
}

SeriesValue eval_mpl(const MultiIndex& k, const PrecisionContext& ctx, const EvalOptions& opts) {
  ctx.validate();
  if (!k.admissible()) throw DomainError("inadmissible index " + k.to_string());
  if (opts.method == SeriesMethod::cvz && k.sign > 0) {
    throw std::invalid_argument("cvz applies to alternating sums only");
  }
  PrecisionGuard guard(ctx);

  std::ostringstream key;
  key << k.to_string() << '|' << current_digits() << '|' << to_string(opts.method) << '|'
      << opts.max_terms;
  if (opts.use_cache) {
    std::lock_guard lock(cache_mutex);
    if (auto it = value_cache().find(key.str()); it != value_cache().end()) {
      require_tolerance(it->second, ctx, k.to_string());
      return it->second;
    }
  }

  SeriesValue out;
  switch (opts.method) {
    case SeriesMethod::auto_select:
    case SeriesMethod::cvz:
      if (k.sign > 0) {
        out = split_tail(k);
        if (out.terms_used > opts.max_terms) {
          throw NonConvergenceError("term cap below the split-tail requirement", INFINITY);
        }
      } else {
        out = alternating_cvz(k, opts.max_terms);
      }
      break;
    case SeriesMethod::direct:
      out = direct(k, opts.max_terms);
      break;
    case SeriesMethod::levin:
      out = levin(k, opts.max_terms, ctx);
      break;
  }
  if (opts.use_cache) {
    std::lock_guard lock(cache_mutex);
    value_cache().emplace(key.str(), out);
  }
  require_tolerance(out, ctx, k.to_string());
  return out;
}

BigReal polylog_half(int k, const PrecisionContext& ctx) {
  if (k < 0) throw DomainError("polylog_half: k must be non-negative");
  PrecisionGuard guard(ctx);
  if (k == 0) return {Real(1), Real(0)};
  // sum_{m>=1} 2^(-m) m^(-k); stop once 2^(-m) drops below the precision.
  const long M = static_cast<long>(std::ceil(current_digits() * std::log2(10.0))) + 8;
  Real acc(0);
  Real p(1);
  for (long m = 1; m <= M; ++m) {
    p /= 2;
    acc += p * inv_power(m, k);
  }
  return {acc, 2 * p + epsilon_at(current_digits() - 2) * (abs(acc) + 1)};
}

}  // namespace mzvkit
