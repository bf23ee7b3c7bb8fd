#include "helpers.hpp"

#include <mzvkit/suite.hpp>

#include <set>

using namespace mzvkit;
using namespace mzvkit::test;

namespace {

Params ints(std::initializer_list<std::pair<const char*, long>> values) {
  Params p;
  for (const auto& [k, v] : values) p[k] = Rational(v);
  return p;
}

json strip_timing(json j) {
  for (auto& r : j) r.erase("wall_ms");
  return j;
}

}  // namespace

TEST_SUITE("identity_suite") {

TEST_CASE("registry covers the required check ids") {
  std::set<std::string> ids;
  std::string last;
  for (const auto& spec : registry()) {
    CHECK(spec.check_id > last);
    last = spec.check_id;
    ids.insert(spec.check_id);
    CHECK_FALSE(spec.grid.empty());
    CHECK_FALSE(spec.summary.empty());
  }
  for (const char* id :
       {"eq05", "eq06", "eq07", "eq08", "eq09", "eq10", "eq11", "eq12", "eq13", "eq14", "remark3i",
        "eq15", "eq15_k0_k1", "general15", "eq16", "eq17", "eq18", "eq19", "eq20", "eq21",
        "eq21_telescope", "eq22_vs_eq17", "bernoulli_id", "thmA_random", "thmA_special",
        "duality23", "duality_note2vi", "thm1_sum3", "thm1_sum4", "euler_formula",
        "bernoulli_recurrence", "pochhammer_deriv", "param_series"}) {
    CHECK_MESSAGE(ids.count(id) == 1, id);
  }
  CHECK_THROWS_AS(find_check("eq99"), UnknownCheckError);
}

TEST_CASE("run_check examples") {
  const PrecisionContext ctx = ctx40();

  auto r = run_check("eq13", ints({{"r", 0}}), ctx);
  CHECK(r.status == CheckStatus::pass);
  {
    PrecisionGuard g(ctx);
    CHECK(gap(r.lhs->real(), ref(pi) * ref(pi) / 6) < 1e-30);
    CHECK(r.abs_residual->real().value < 1e-12);
  }

  r = run_check("eq19", ints({{"s", 3}}), ctx);
  CHECK(r.status == CheckStatus::pass);

  Params p = ints({{"s", 1}});
  p["coefficient"] = std::string("proof_chain");
  r = run_check("eq16", p, ctx);
  CHECK(r.status == CheckStatus::pass);

  p["coefficient"] = std::string("eq17");
  r = run_check("eq16", p, ctx);
  CHECK(r.status == CheckStatus::reported);
  {
    PrecisionGuard g(ctx);
    const Real expected = (2 - Real(4) / 7) * Real(7) / 4 * pow(ref(pi), 4) / 90;
    CHECK(gap(r.abs_residual->real(), expected) < 1e-30);
  }

  r = run_check("eq15", ints({{"k", 1}, {"s", 1}}), ctx);
  CHECK(r.status == CheckStatus::pass);
  {
    PrecisionGuard g(ctx);
    CHECK(gap(r.rhs->real(), 3 * ref(zeta3)) < 1e-30);
  }

  r = run_check("bernoulli_id", ints({{"s", 10}}), ctx);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.lhs->exact);
  CHECK(r.abs_residual->q == 0);
}

TEST_CASE("parameter validation") {
  const PrecisionContext ctx = ctx40();
  CHECK_THROWS_AS(run_check("eq19", ints({{"s", 99}}), ctx), std::invalid_argument);
  CHECK_THROWS_AS(run_check("eq19", ints({{"t", 1}}), ctx), std::invalid_argument);
  CHECK_THROWS_AS(run_check("eq19", Params{}, ctx), std::invalid_argument);
  Params half;
  half["s"] = Rational(1, 2);
  CHECK_THROWS_AS(run_check("eq19", half, ctx), std::invalid_argument);
  Params bad = ints({{"s", 1}});
  bad["coefficient"] = std::string("nope");
  CHECK_THROWS_AS(run_check("eq16", bad, ctx), std::invalid_argument);
  CHECK_THROWS_AS(run_check("nosuchcheck", ints({{"s", 1}}), ctx), UnknownCheckError);
}

TEST_CASE("pipelines") {
  const PrecisionContext ctx = ctx40();
  auto r = theorem1_pipeline(0, 1, Theorem1Sum::sum3, ctx);
  CHECK(r.status == CheckStatus::pass);
  r = theorem1_pipeline(0, 2, Theorem1Sum::sum3, ctx);
  CHECK(r.status == CheckStatus::pass);
  {
    PrecisionGuard g(ctx);
    CHECK(gap(r.rhs->real(), Real(7) / 4 * pow(ref(pi), 4) / 90) < 1e-30);
  }
  r = theorem1_pipeline(1, 1, Theorem1Sum::sum4, ctx);
  CHECK(r.status == CheckStatus::pass);
  {
    PrecisionGuard g(ctx);
    CHECK(gap(r.lhs->real(), 2 * ref(zeta3)) < 1e-30);
  }

  for (int s = 1; s <= 2; ++s) {
    const auto chain = theorem3_pipeline(s, ctx);
    REQUIRE(chain.size() == 8);
    int reported = 0;
    for (const auto& link : chain) {
      CHECK(link.status != CheckStatus::fail);
      reported += link.status == CheckStatus::reported;
    }
    CHECK(reported == 2);
  }
  CHECK_THROWS_AS(theorem3_pipeline(6, ctx), DomainError);
}

TEST_CASE("run_suite filters") {
  const PrecisionContext ctx = ctx40();
  auto rep = run_suite("eq19", ctx);
  CHECK(rep.results.size() == 6);
  CHECK(rep.passed == 6);

  rep = run_suite("bernoulli_id", ctx);
  CHECK(rep.results.size() == 30);
  for (const auto& r : rep.results) CHECK(r.abs_residual->q == 0);

  rep = run_suite("eq1[78]", ctx);
  CHECK(rep.failed == 0);
  CHECK(rep.reported == 10);

  CHECK_THROWS_AS(run_suite("nosuchcheck", ctx), UnknownCheckError);
  CHECK(glob_match("eq2*", "eq21_telescope"));
  CHECK_FALSE(glob_match("eq2", "eq21"));
}

TEST_CASE("JSON records round-trip bit-identically") {
  const PrecisionContext ctx = ctx40();
  for (const char* filter : {"eq13", "eq17", "eq22_vs_eq17", "duality23", "thmA_special"}) {
    const auto rep = run_suite(filter, ctx);
    const std::string text = report_json(rep.results).dump(2);
    const json parsed = json::parse(text);
    std::vector<IdentityCheckResult> back;
    for (const auto& j : parsed) back.push_back(result_from_json(j));
    CHECK(report_json(back).dump(2) == text);
  }
}

TEST_CASE("JSON record layout") {
  const auto r = run_check("eq19", ints({{"s", 2}}), ctx40());
  const json j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"check_id", "params", "lhs", "rhs", "abs_residual",
                                         "rel_residual", "tolerance", "status", "wall_ms"});
  CHECK(j["status"] == "pass");
  CHECK(j["params"]["s"] == 2);
  CHECK(j["tolerance"] == "1.000000e-09");
}

TEST_CASE("reports are deterministic apart from timing") {
  const PrecisionContext ctx = ctx40();
  for (const char* filter : {"eq1[2-5]", "thm1_*", "duality*"}) {
    const json a = strip_timing(report_json(run_suite(filter, ctx).results));
    const json b = strip_timing(report_json(run_suite(filter, ctx).results));
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("tolerance discipline") {
  const PrecisionContext ctx = ctx40();
  const auto rep = run_suite("eq1[5-9]", ctx);
  for (const auto& r : rep.results) {
    if (r.lhs->exact && r.rhs->exact) continue;
    PrecisionGuard g(ctx);
    const Real err = r.lhs->real().err + r.rhs->real().err;
    CHECK(10 * err.convert_to<double>() <= r.tolerance);
  }
}

TEST_CASE("status helpers") {
  CHECK(to_string(CheckStatus::reported) == "reported");
  CHECK(parse_status("fail") == CheckStatus::fail);
  CHECK_THROWS(parse_status("maybe"));
}

}  // TEST_SUITE
