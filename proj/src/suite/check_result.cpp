#include <mzvkit/suite.hpp>

#include <cstdio>
#include <regex>

namespace mzvkit {

std::string to_string(const ParamValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return to_string(*q);
  return std::get<std::string>(v);
}

SideValue SideValue::exact_value(Rational q) {
  SideValue s;
  s.exact = true;
  s.q = std::move(q);
  s.x = BigReal(to_real(s.q));
  return s;
}

SideValue SideValue::approx(BigReal x) {
  SideValue s;
  s.x = std::move(x);
  return s;
}

BigReal SideValue::real() const { return exact ? BigReal(to_real(q)) : x; }

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::reported: return "reported";
  }
  return "fail";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "reported") return CheckStatus::reported;
  throw std::invalid_argument("unknown status '" + s + "'");
}

void finalize(IdentityCheckResult& r, bool reported) {
  if (!r.lhs || !r.rhs) {
    r.abs_residual.reset();
    r.rel_residual.reset();
    r.status = CheckStatus::fail;
    return;
  }
  bool ok = false;
  if (r.lhs->exact && r.rhs->exact) {
    const Rational diff = abs(r.lhs->q - r.rhs->q);
    const Rational rel = r.rhs->q == 0 ? diff : Rational(diff / abs(r.rhs->q));
    r.abs_residual = SideValue::exact_value(diff);
    r.rel_residual = SideValue::exact_value(rel);
    const Rational tol(r.tolerance);
    ok = diff <= tol || (abs(r.rhs->q) > 1 && rel <= tol);
  } else {
    PrecisionGuard guard(r.digits + PrecisionContext::guard_digits);
    const BigReal l = r.lhs->real();
    const BigReal h = r.rhs->real();
    const Real diff = abs(l.value - h.value);
    const Real rel = h.value == 0 ? diff : Real(diff / abs(h.value));
    r.abs_residual = SideValue::approx(BigReal(diff));
    r.rel_residual = SideValue::approx(BigReal(rel));
    const Real tol(r.tolerance);
    ok = diff <= tol || (abs(h.value) > 1 && rel <= tol);
    if (10 * (l.err + h.err) > tol) {
      ok = false;
      if (r.reason.empty()) r.reason = "evaluator error bounds too wide for the tolerance";
    }
  }
  if (reported) {
    r.status = CheckStatus::reported;
  } else {
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  }
}

namespace {

std::string format_tolerance(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", t);
  return buf;
}

json side_json(const std::optional<SideValue>& v, int digits) {
  if (!v) return nullptr;
  if (v->exact) return to_string(v->q);
  PrecisionGuard guard(digits + PrecisionContext::guard_digits);
  return to_decimal_string(v->x.value, digits);
}

std::optional<SideValue> side_from_json(const json& j, int digits) {
  if (j.is_null()) return std::nullopt;
  const auto text = j.get<std::string>();
  if (text.find_first_of(".eEn") == std::string::npos) {
    return SideValue::exact_value(Rational(text));
  }
  PrecisionGuard guard(digits + PrecisionContext::guard_digits);
  return SideValue::approx(BigReal(Real(text)));
}

const std::regex& rational_pattern() {
  static const std::regex re(R"(-?[0-9]+/[0-9]+)");
  return re;
}

int digits_of(const json& j) {
  // Digits after the point of a scientific decimal string, the precision
  // it was rendered with.
  if (!j.is_string()) return 0;
  const auto text = j.get<std::string>();
  const auto e = text.find_first_of("eE");
  const auto dot = text.find('.');
  if (e == std::string::npos || dot == std::string::npos || dot > e) return 0;
  return static_cast<int>(e - dot - 1);
}

}  // namespace

json to_json(const IdentityCheckResult& r) {
  json params = json::object();
  for (const auto& [name, v] : r.params) {
    if (const auto* q = std::get_if<Rational>(&v)) {
      if (boost::multiprecision::denominator(*q) == 1) {
        params[name] = boost::multiprecision::numerator(*q).convert_to<long long>();
      } else {
        params[name] = to_string(*q);
      }
    } else {
      params[name] = std::get<std::string>(v);
    }
  }
  json j;
  j["check_id"] = r.check_id;
  j["params"] = std::move(params);
  j["lhs"] = side_json(r.lhs, r.digits);
  j["rhs"] = side_json(r.rhs, r.digits);
  j["abs_residual"] = side_json(r.abs_residual, 6);
  j["rel_residual"] = side_json(r.rel_residual, 6);
  j["tolerance"] = format_tolerance(r.tolerance);
  j["status"] = to_string(r.status);
  j["wall_ms"] = r.wall_ms;
  return j;
}

IdentityCheckResult result_from_json(const json& j) {
  IdentityCheckResult r;
  r.check_id = j.at("check_id").get<std::string>();
  for (const auto& [name, v] : j.at("params").items()) {
    if (v.is_number_integer()) {
      r.params[name] = Rational(v.get<long long>());
    } else {
      const auto text = v.get<std::string>();
      if (std::regex_match(text, rational_pattern())) {
        r.params[name] = Rational(text);
      } else {
        r.params[name] = text;
      }
    }
  }
  const int d = std::max(digits_of(j.at("lhs")), digits_of(j.at("rhs")));
  r.digits = d > 0 ? d : 40;
  r.lhs = side_from_json(j.at("lhs"), r.digits);
  r.rhs = side_from_json(j.at("rhs"), r.digits);
  r.abs_residual = side_from_json(j.at("abs_residual"), 6);
  r.rel_residual = side_from_json(j.at("rel_residual"), 6);
  r.tolerance = std::stod(j.at("tolerance").get<std::string>());
  r.status = parse_status(j.at("status").get<std::string>());
  r.wall_ms = j.at("wall_ms").get<long>();
  return r;
}

json report_json(const std::vector<IdentityCheckResult>& results) {
  json arr = json::array();
  for (const auto& r : results) arr.push_back(to_json(r));
  return arr;
}

}  // namespace mzvkit
