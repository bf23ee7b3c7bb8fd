#include <mzvkit/detail/checks.hpp>

#include <fnmatch.h>

#include <algorithm>
#include <chrono>

namespace mzvkit {

ParamSpec ParamSpec::integer(std::string name, long lo, long hi) {
  ParamSpec p;
  p.name = std::move(name);
  p.kind = Kind::integer;
  p.lo = lo;
  p.hi = hi;
  return p;
}

ParamSpec ParamSpec::rational(std::string name, Rational lo, Rational hi) {
  ParamSpec p;
  p.name = std::move(name);
  p.kind = Kind::rational;
  p.lo = std::move(lo);
  p.hi = std::move(hi);
  return p;
}

ParamSpec ParamSpec::choice(std::string name, std::vector<std::string> options) {
  ParamSpec p;
  p.name = std::move(name);
  p.kind = Kind::choice;
  p.choices = std::move(options);
  return p;
}

namespace detail {

long param_int(const Params& p, const std::string& name) {
  const Rational q = param_rational(p, name);
  if (boost::multiprecision::denominator(q) != 1) {
    throw std::invalid_argument("parameter " + name + " must be an integer");
  }
  return boost::multiprecision::numerator(q).convert_to<long>();
}

Rational param_rational(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw std::invalid_argument("missing parameter " + name);
  const auto* q = std::get_if<Rational>(&it->second);
  if (!q) throw std::invalid_argument("parameter " + name + " must be numeric");
  return *q;
}

std::string param_choice(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw std::invalid_argument("missing parameter " + name);
  const auto* s = std::get_if<std::string>(&it->second);
  if (!s) throw std::invalid_argument("parameter " + name + " must be a name");
  return *s;
}

std::vector<Params> grid(
    const std::vector<std::pair<std::string, std::vector<ParamValue>>>& axes) {
  std::vector<Params> out{Params{}};
  for (const auto& [name, values] : axes) {
    std::vector<Params> next;
    for (const auto& base : out) {
      for (const auto& v : values) {
        Params p = base;
        p[name] = v;
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<ParamValue> int_range(long lo, long hi) {
  std::vector<ParamValue> out;
  for (long i = lo; i <= hi; ++i) out.emplace_back(Rational(i));
  return out;
}

std::vector<ParamValue> choices(const std::vector<std::string>& names) {
  return {names.begin(), names.end()};
}

BigReal mpl(const std::vector<int>& parts, bool strict, int sign, const PrecisionContext& ctx) {
  return eval_mpl(make_index(parts, strict, sign), ctx, EvalOptions{}).value;
}

std::vector<int> repeated(int a, int n, std::vector<int> rest) {
  std::vector<int> out(static_cast<std::size_t>(std::max(n, 0)), a);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

BigReal to_big(const Rational& q) { return BigReal(to_real(q)); }

SideValue approx(const BigReal& x) { return SideValue::approx(x); }
SideValue exact(const Rational& q) { return SideValue::exact_value(q); }

}  // namespace detail

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> v;
    detail::register_foundations(v);
    detail::register_application1(v);
    detail::register_application2(v);
    std::sort(v.begin(), v.end(),
              [](const CheckSpec& a, const CheckSpec& b) { return a.check_id < b.check_id; });
    return v;
  }();
  return specs;
}

const CheckSpec& find_check(const std::string& id) {
  for (const auto& spec : registry()) {
    if (spec.check_id == id) return spec;
  }
  throw UnknownCheckError("unknown check '" + id + "'");
}

namespace {

void validate_params(const CheckSpec& spec, const Params& params) {
  for (const auto& [name, value] : params) {
    const bool known = std::any_of(spec.params.begin(), spec.params.end(),
                                   [&](const ParamSpec& p) { return p.name == name; });
    if (!known) throw std::invalid_argument(spec.check_id + ": unknown parameter " + name);
  }
  for (const auto& p : spec.params) {
    auto it = params.find(p.name);
    if (it == params.end()) throw std::invalid_argument(spec.check_id + ": missing " + p.name);
    if (p.kind == ParamSpec::Kind::choice) {
      const auto* s = std::get_if<std::string>(&it->second);
      if (!s || std::find(p.choices.begin(), p.choices.end(), *s) == p.choices.end()) {
        throw std::invalid_argument(spec.check_id + ": " + p.name + " is not a valid choice");
      }
      continue;
    }
    const auto* q = std::get_if<Rational>(&it->second);
    if (!q) throw std::invalid_argument(spec.check_id + ": " + p.name + " must be numeric");
    if (p.kind == ParamSpec::Kind::integer && boost::multiprecision::denominator(*q) != 1) {
      throw std::invalid_argument(spec.check_id + ": " + p.name + " must be an integer");
    }
    if (*q < p.lo || *q > p.hi) {
      throw std::invalid_argument(spec.check_id + ": " + p.name + " out of range [" +
                                  to_string(p.lo) + ", " + to_string(p.hi) + "]");
    }
  }
}

IdentityCheckResult execute(const CheckSpec& spec, const Params& params,
                            const PrecisionContext& ctx) {
  IdentityCheckResult r;
  r.check_id = spec.check_id;
  r.params = params;
  r.digits = ctx.decimal_digits;
  const auto start = std::chrono::steady_clock::now();
  bool reported = false;
  try {
    const Evaluation e = spec.evaluate(params, ctx);
    r.lhs = e.lhs;
    r.rhs = e.rhs;
    r.tolerance = e.tolerance;
    reported = e.reported;
  } catch (const NonConvergenceError& err) {
    r.reason = std::string("non-convergence: ") + err.what();
  } catch (const DomainError& err) {
    r.reason = std::string("domain error: ") + err.what();
  }
  finalize(r, reported);
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

}  // namespace

IdentityCheckResult run_check(const std::string& id, const Params& params,
                              const PrecisionContext& ctx) {
  ctx.validate();
  const CheckSpec& spec = find_check(id);
  validate_params(spec, params);
  return execute(spec, params, ctx);
}

bool glob_match(const std::string& pattern, const std::string& text) {
  return ::fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

SuiteReport run_suite(const std::string& filter, const PrecisionContext& ctx) {
  ctx.validate();
  const bool everything = filter.empty() || filter == "all";
  SuiteReport report;
  bool matched = false;
  for (const auto& spec : registry()) {
    if (!everything && !glob_match(filter, spec.check_id)) continue;
    matched = true;
    for (const auto& params : spec.grid) {
      auto r = execute(spec, params, ctx);
      switch (r.status) {
        case CheckStatus::pass: ++report.passed; break;
        case CheckStatus::fail: ++report.failed; break;
        case CheckStatus::reported: ++report.reported; break;
      }
      report.results.push_back(std::move(r));
    }
  }
  if (!matched) throw UnknownCheckError("no check matches '" + filter + "'");
  return report;
}

}  // namespace mzvkit
