#include <mzvkit/series.hpp>
#include <mzvkit/suite.hpp>
#include <mzvkit/zeta_poly.hpp>

#include <CLI11.hpp>

#include <boost/algorithm/string.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

namespace {

using namespace mzvkit;

enum exit_code : int { ok = 0, checks_failed = 1, usage = 2, no_convergence = 3 };

struct CliConfig {
  int digits = 40;
  double tolerance = PrecisionContext{}.target_tolerance;
  long max_terms = EvalOptions{}.max_terms;
  std::string method = "auto";
  std::string json_path;
  std::string cache_path;

  PrecisionContext context() const {
    if (digits < 20) throw std::invalid_argument("--precision must be at least 20");
    if (!(tolerance > 0)) throw std::invalid_argument("--tol must be positive");
    PrecisionContext ctx;
    ctx.decimal_digits = digits;
    ctx.target_tolerance = tolerance;
    ctx.validate();
    return ctx;
  }

  EvalOptions options() const {
    if (max_terms < 1) throw std::invalid_argument("--max-terms must be positive");
    EvalOptions o;
    o.method = parse_method(method);
    o.max_terms = max_terms;
    return o;
  }
};

void add_common_flags(CLI::App& cmd, CliConfig& cfg) {
  cmd.add_option("--precision", cfg.digits, "working precision in decimal digits");
  cmd.add_option("--tol", cfg.tolerance, "target absolute error of each evaluation");
  cmd.add_option("--max-terms", cfg.max_terms, "series term budget (eval)");
  cmd.add_option("--method", cfg.method, "summation method (eval)")
      ->check(CLI::IsMember({"auto", "direct", "levin", "cvz"}));
  cmd.add_option("--json", cfg.json_path, "write a JSON document to this path");
}

void write_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << doc.dump(2) << '\n';
}

std::string plain(const Real& x, int digits) { return x.str(digits); }
std::string sci(const Real& x) { return x.str(3, std::ios_base::scientific); }

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------
struct EvalOutcome {
  std::string name;
  std::string value;
  std::string err;
  long terms = 0;
  std::string method;
};

Rational parse_rational(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  static const std::regex dec(R"(\s*(-?)(\d*)\.(\d+)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, re)) {
    const Integer num(std::stol(m[1].str()));
    return m[2].matched ? Rational(num, Integer(std::stol(m[2].str()))) : Rational(num);
  }
  if (std::regex_match(text, m, dec)) {
    std::string digits = m[2].str() + m[3].str();
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    const Rational q(Integer(digits),
                     boost::multiprecision::pow(Integer(10), static_cast<unsigned>(m[3].length())));
    return m[1].length() ? Rational(-q) : q;
  }
  throw ParseError("expected a rational number, got '" + text + "'");
}

int parse_int(const std::string& text) {
  const Rational q = parse_rational(text);
  if (boost::multiprecision::denominator(q) != 1) throw ParseError("expected an integer, got '" + text + "'");
  return boost::multiprecision::numerator(q).convert_to<int>();
}

// Named series: li_half(k), lemma1(alpha, s[, r]), theorem2(alpha, s[, r]),
// hurwitz(alpha; k1, ..., kn). Returns nullopt when the name is not one of these.
std::optional<SeriesValue> eval_named(const std::string& expr, const PrecisionContext& ctx) {
  static const std::regex call(R"(\s*([a-z_0-9]+)\s*\((.*)\)\s*)");
  std::smatch m;
  if (!std::regex_match(expr, m, call)) return std::nullopt;
  const std::string name = m[1].str();
  const std::string body = m[2].str();
  std::vector<std::string> args;
  if (name == "hurwitz") {
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw ParseError("hurwitz(alpha; k1, ..., kn) needs ';'");
    HurwitzIndex h;
    h.alpha = parse_rational(body.substr(0, semi));
    boost::split(args, body.substr(semi + 1), boost::is_any_of(","));
    for (const auto& a : args) h.parts.push_back(parse_int(a));
    h.validate();
    return eval_hurwitz_mzv(h, Side::lhs, ctx);
  }
  boost::split(args, body, boost::is_any_of(","));
  if (name == "li_half") {
    if (args.size() != 1) throw ParseError("li_half(k) takes one argument");
    SeriesValue v;
    v.value = polylog_half(parse_int(args[0]), ctx);
    v.method = "direct";
    return v;
  }
  if (name == "lemma1" || name == "theorem2") {
    if (args.size() != 2 && args.size() != 3) throw ParseError(name + "(alpha, s[, r]) takes two or three arguments");
    const auto fam = name == "lemma1" ? ParamFamily::lemma1 : ParamFamily::theorem2;
    const int r = args.size() == 3 ? parse_int(args[2]) : 0;
    return eval_param_series(fam, parse_rational(args[0]), parse_int(args[1]), Side::lhs, r, ctx);
  }
  return std::nullopt;
}

json load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return json::object();
  try {
    json j = json::parse(in);
    return j.is_object() ? j : json::object();
  } catch (const json::parse_error&) {
    return json::object();
  }
}

EvalOutcome run_eval(const std::string& expr, const CliConfig& cfg) {
  const PrecisionContext ctx = cfg.context();
  const EvalOptions opts = cfg.options();
  const PrecisionGuard guard(ctx);

  if (auto named = eval_named(expr, ctx)) {
    return {boost::trim_copy(expr), plain(named->value.value, ctx.decimal_digits),
            sci(named->value.err), named->terms_used, named->method};
  }

  const MultiIndex k = parse_index(expr);
  const std::string key = k.to_string();
  json cache;
  if (!cfg.cache_path.empty()) {
    cache = load_cache(cfg.cache_path);
    if (cache.contains(key)) {
      const json& e = cache[key];
      if (e.value("digits", 0) >= ctx.decimal_digits) {
        const Real v(e.at("value").get<std::string>());
        return {key, plain(v, ctx.decimal_digits), e.at("err").get<std::string>(),
                e.value("terms", 0L), e.value("method", std::string("cache"))};
      }
    }
  }

  const SeriesValue v = eval_mpl(k, ctx, opts);
  EvalOutcome out{key, plain(v.value.value, ctx.decimal_digits), sci(v.value.err), v.terms_used,
                  v.method};
  if (!cfg.cache_path.empty()) {
    cache[key] = {{"value", v.value.value.str(ctx.working_digits(), std::ios_base::scientific)},
                  {"err", out.err},
                  {"digits", ctx.decimal_digits},
                  {"terms", v.terms_used},
                  {"method", v.method}};
    write_json(cfg.cache_path, cache);
  }
  return out;
}

int cmd_eval(const std::string& expr, const CliConfig& cfg) {
  const EvalOutcome r = run_eval(expr, cfg);
  std::cout << r.name << '\n'
            << "  value  " << r.value << '\n'
            << "  err    " << r.err << '\n'
            << "  terms  " << r.terms << '\n'
            << "  method " << r.method << '\n';
  if (!cfg.json_path.empty()) {
    write_json(cfg.json_path, json{{"expr", r.name},
                                   {"value", r.value},
                                   {"err", r.err},
                                   {"terms", r.terms},
                                   {"method", r.method},
                                   {"digits", cfg.digits}});
  }
  return ok;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------
std::string params_text(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ' ';
    out += k + '=';
    out += std::holds_alternative<Rational>(v) ? to_string(std::get<Rational>(v))
                                               : std::get<std::string>(v);
  }
  return out;
}

int cmd_verify(const std::string& pattern, const CliConfig& cfg) {
  const PrecisionContext ctx = cfg.context();
  const SuiteReport rep = run_suite(pattern, ctx);
  for (const auto& r : rep.results) {
    if (r.status == CheckStatus::pass) continue;
    std::cout << to_string(r.status) << "  " << r.check_id << "  " << params_text(r.params);
    const json j = to_json(r);
    if (!j["abs_residual"].is_null()) std::cout << "  abs=" << j["abs_residual"].get<std::string>();
    if (!r.reason.empty()) std::cout << "  (" << r.reason << ')';
    std::cout << '\n';
  }
  std::cout << rep.passed << " pass / " << rep.failed << " fail / " << rep.reported << " reported\n";
  if (!cfg.json_path.empty()) write_json(cfg.json_path, report_json(rep.results));
  return rep.failed == 0 ? ok : checks_failed;
}

// ---------------------------------------------------------------------------
// constants
// ---------------------------------------------------------------------------
constexpr int max_bernoulli = 500;
constexpr int max_zeta = 200;

int cmd_constants(const std::string& kind, int upto, const CliConfig& cfg) {
  json doc = json::array();
  if (kind == "bernoulli") {
    if (upto < 0 || upto > max_bernoulli) throw std::invalid_argument("--upto must be in 0..500");
    for (int n = 0; n <= upto; ++n) {
      const std::string b = to_string(bernoulli(n));
      std::cout << "B_" << n << " = " << b << '\n';
      doc.push_back({{"n", n}, {"value", b}});
    }
  } else if (kind == "zeta") {
    if (upto < 2 || upto > max_zeta) throw std::invalid_argument("--upto must be in 2..200");
    const PrecisionContext ctx = cfg.context();
    const PrecisionGuard guard(ctx);
    for (int k = 2; k <= upto; ++k) {
      const std::string v = plain(zeta_value(k).value, ctx.decimal_digits);
      std::cout << "zeta(" << k << ") = " << v << '\n';
      doc.push_back({{"k", k}, {"value", v}});
    }
  } else {
    if (upto < 0 || upto > max_gamma_order) throw std::invalid_argument("--upto must be in 0..12");
    const auto g = gamma_ratio_coeffs(upto);
    std::string line;
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
      if (i) line += ", ";
      line += g.coeffs[i].to_string();
      doc.push_back({{"i", i}, {"value", g.coeffs[i].to_string()}});
    }
    std::cout << line << '\n';
  }
  if (!cfg.json_path.empty()) write_json(cfg.json_path, doc);
  return ok;
}

int default_digits() {
  const char* env = std::getenv("MZVKIT_PRECISION");
  if (!env || !*env) return 40;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("MZVKIT_PRECISION is not an integer: ") + env);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mzvkit: multiple zeta values, Euler sums and identity checks"};
  app.require_subcommand(1);

  CliConfig cfg;
  try {
    cfg.digits = default_digits();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }

  std::string expr;
  auto* eval = app.add_subcommand("eval", "evaluate an index such as zs({2}^3) or a named series");
  eval->add_option("expr", expr, "index string or named series")->required();
  add_common_flags(*eval, cfg);
  eval->add_option("--cache", cfg.cache_path, "JSON value cache file");

  std::string pattern;
  auto* verify = app.add_subcommand("verify", "run identity checks whose id matches a glob");
  verify->add_option("pattern", pattern, "check id glob, or all")->required();
  add_common_flags(*verify, cfg);

  std::string kind;
  int upto = 8;
  auto* constants = app.add_subcommand("constants", "print Bernoulli numbers, zeta values or gamma coefficients");
  constants->add_option("kind", kind, "bernoulli | zeta | gamma-coeffs")
      ->required()
      ->check(CLI::IsMember({"bernoulli", "zeta", "gamma-coeffs"}));
  constants->add_option("--upto", upto, "largest index");
  add_common_flags(*constants, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*eval) return cmd_eval(expr, cfg);
    if (*verify) return cmd_verify(pattern, cfg);
    return cmd_constants(kind, upto, cfg);
  } catch (const NonConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return no_convergence;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const UnknownCheckError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
}
