#include <mzvkit/detail/checks.hpp>

namespace mzvkit {

namespace {

Params ints(std::initializer_list<std::pair<const char*, long>> values) {
  Params p;
  for (const auto& [k, v] : values) p[k] = Rational(v);
  return p;
}

}  // namespace

IdentityCheckResult theorem1_pipeline(int r, int s, Theorem1Sum which,
                                      const PrecisionContext& ctx) {
  const std::string id = which == Theorem1Sum::sum3 ? "thm1_sum3" : "thm1_sum4";
  return run_check(id, ints({{"r", r}, {"s", s}}), ctx);
}

std::vector<IdentityCheckResult> theorem3_pipeline(int s, const PrecisionContext& ctx) {
  if (s < 1 || s > 5) throw DomainError("theorem3_pipeline: s must be in 1..5");
  std::vector<IdentityCheckResult> out;
  out.push_back(run_check("eq18", ints({{"s", s}}), ctx));
  out.push_back(run_check("eq20", ints({{"s", s}}), ctx));
  out.push_back(run_check("eq21_telescope", ints({{"s", s}, {"t", 4}}), ctx));
  for (const char* form : {"bernoulli", "zeta_pairs"}) {
    Params p = ints({{"s", s}});
    p["form"] = std::string(form);
    out.push_back(run_check("eq21", p, ctx));
  }
  for (const char* v : {"proof_chain", "eq17", "eq22"}) {
    Params p = ints({{"s", s}});
    p["coefficient"] = std::string(v);
    out.push_back(run_check("eq16", p, ctx));
  }
  return out;
}

}  // namespace mzvkit
