#include <mzvkit/detail/checks.hpp>
#include <mzvkit/suite.hpp>
#include <mzvkit/zeta_poly.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace mzvkit;

namespace {

const PrecisionContext ctx{};

long iparam(const IdentityCheckResult& r, const char* name) {
  return boost::multiprecision::numerator(std::get<Rational>(r.params.at(name))).convert_to<long>();
}

struct Tally {
  bool ok = true;
  int count = 0;
  double worst = 0;
  std::ostringstream notes;

  void note(const std::string& s) {
    ok = false;
    notes << ' ' << s;
  }

  // Every selected result must pass with |lhs - rhs| below the bound.
  void results(const std::string& filter, double bound,
               const std::function<bool(const IdentityCheckResult&)>& keep = nullptr) {
    for (const auto& r : run_suite(filter, ctx).results) {
      if (keep && !keep(r)) continue;
      ++count;
      const std::string where = r.check_id + "{" + to_json(r)["params"].dump() + "}";
      if (r.status != CheckStatus::pass || !r.abs_residual) {
        note(where + " status=" + to_string(r.status) + (r.reason.empty() ? "" : " " + r.reason));
        continue;
      }
      double res = 0;
      if (r.abs_residual->exact) {
        if (r.abs_residual->q != 0 && bound == 0) note(where + " nonzero exact residual");
        res = r.abs_residual->q.convert_to<double>();
      } else {
        PrecisionGuard g(ctx);
        res = r.abs_residual->real().value.convert_to<double>();
      }
      worst = std::max(worst, res);
      if (bound > 0 ? !(res < bound) : res != 0) note(where + " residual " + std::to_string(res));
    }
  }

  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond) note(what);
  }

  void close(const BigReal& x, const Real& y, double bound, const std::string& what) {
    PrecisionGuard g(ctx);
    const double d = abs(x.value - y).convert_to<double>();
    worst = std::max(worst, d);
    expect(d < bound, what + " off by " + std::to_string(d));
  }
};

Real pi_pow(int k) {
  PrecisionGuard g(ctx);
  return pow(pi_constant(), k);
}

Real even_zeta(int s) { return to_real(zeta_even_exact(s).coefficient) * pi_pow(2 * s); }

BigReal value(const char* index) { return eval_mpl(parse_index(index), ctx).value; }

int failures = 0;

void report(int n, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.note(std::string("exception: ") + e.what());
  }
  if (!t.ok) ++failures;
  char worst[32];
  std::snprintf(worst, sizeof worst, "%.2e", t.worst);
  std::cout << (t.ok ? "PASS" : "FAIL") << " [" << n << "] " << title << " (" << t.count
            << " items, max residual " << worst << ")";
  if (!t.ok) std::cout << " :" << t.notes.str();
  std::cout << std::endl;
}

}  // namespace

int main() {
  report(1, "eq13/eq14 r=0..6 below 1e-10 with eta(2) and zeta_-(1,2) forced", [](Tally& t) {
    t.results("eq13", 1e-10);
    t.results("eq14", 1e-10);
    PrecisionGuard g(ctx);
    t.close(value("za(2)"), even_zeta(1) / 2, 1e-30, "eta(2) = pi^2/12");
    t.close(value("za(1,2)"), -value("z(3)").value / 8, 1e-30, "zeta_-(1,2) = -zeta(3)/8");
  });

  report(2, "eq07 r<=4 s<=3 and eq08 r<=3 s<=3 below 1e-9 with symbolic gamma coefficients",
         [](Tally& t) {
           t.results("eq07", 1e-9, [](const auto& r) { return iparam(r, "r") <= 4 && iparam(r, "s") <= 3; });
           t.results("eq08", 1e-9, [](const auto& r) { return iparam(r, "r") <= 3 && iparam(r, "s") <= 3; });
           const auto g = gamma_ratio_coeffs(3);
           t.expect(g.coeffs[2] == -ZetaPolynomial::zeta(2), "coeff_2 = -z2");
           t.expect(g.coeffs[3] == 2 * ZetaPolynomial::zeta(3), "coeff_3 = 2*z3");
         });

  report(3, "eq12 r<=4 s<=3 and the alternative form below 1e-9", [](Tally& t) {
    t.results("eq12", 1e-9);
    t.results("remark3i", 1e-9, [](const auto& r) {
      const long rr = iparam(r, "r"), s = iparam(r, "s");
      return (rr == 1 && s == 1) || (rr == 2 && s == 1) || (rr == 1 && s == 2);
    });
    PrecisionGuard g(ctx);
    const Real z3 = value("z(3)").value;
    t.close(value("zs(1,2)"), 2 * z3, 1e-30, "zeta*(1,2) = 2 zeta(3)");
    t.close(value("zsa(1,2)"), 5 * z3 / 8, 1e-30, "zeta*_-(1,2) = 5 zeta(3)/8");
  });

  report(4, "eq15 k<=4 s<=3 with k=0,1 cases below 1e-9; general form k,r<=2 s<=2 below 1e-8",
         [](Tally& t) {
           t.results("eq15", 1e-9);
           t.results("eq15_k0_k1", 1e-9);
           t.results("general15", 1e-8);
         });

  report(5, "eq19 s=1..6 and eq18 s=1..4 below 1e-9; eq18 at s=1 is 7 zeta(4)", [](Tally& t) {
    t.results("eq19", 1e-9);
    t.results("eq18", 1e-9, [](const auto& r) { return iparam(r, "s") <= 4; });
    Params p;
    p["s"] = Rational(1);
    const auto r = run_check("eq18", p, ctx);
    PrecisionGuard g(ctx);
    t.close(r.lhs->real(), 7 * even_zeta(2), 1e-30, "eq18 s=1 lhs = 7 zeta(4)");
    t.close(r.rhs->real(), 7 * even_zeta(2), 1e-30, "eq18 s=1 rhs = 7 zeta(4)");
  });

  report(6, "eq21 telescoping t in {2,4} s<=4 and Bernoulli form below 1e-9, exact coefficients",
         [](Tally& t) {
           t.results("eq21_telescope", 1e-9, [](const auto& r) {
             const long tt = iparam(r, "t");
             return (tt == 2 || tt == 4) && iparam(r, "s") <= 4;
           });
           t.results("eq21", 1e-9, [](const auto& r) {
             return std::get<std::string>(r.params.at("form")) == "bernoulli";
           });
           t.results("eq21", 0, [](const auto& r) {
             return std::get<std::string>(r.params.at("form")) == "zeta_pairs";
           });
           t.expect(theorem3_bernoulli_sum(1) == Rational(-8, 7), "X(1) = -8/7");
         });

  report(7, "eq16 proof_chain passes s=1..5; eq17/eq22 variants reported with exact coefficients",
         [](Tally& t) {
           t.results("eq16", 1e-9, [](const auto& r) {
             return std::get<std::string>(r.params.at("coefficient")) == "proof_chain";
           });
           for (const auto& r : run_suite("eq16", ctx).results) {
             if (std::get<std::string>(r.params.at("coefficient")) == "proof_chain") continue;
             t.expect(r.status == CheckStatus::reported, r.check_id + " variant not reported");
           }
           for (const auto& r : run_suite("eq17", ctx).results) {
             t.expect(r.status == CheckStatus::reported && r.lhs->exact && r.rhs->exact,
                      "eq17 comparison must be exact and reported");
           }
           t.expect(theorem3_coefficient(1, Theorem3Variant::eq17) == 2, "c(1) eq17 = 2");
           t.expect(theorem3_coefficient(1, Theorem3Variant::eq22) == 2, "c(1) eq22 = 2");
           t.expect(theorem3_coefficient(1, Theorem3Variant::proof_chain) == Rational(4, 7),
                    "c(1) proof_chain = 4/7");
           PrecisionGuard g(ctx);
           const Real ratio = value("zs(4)").value / value("zs(2,2)").value;
           t.expect(abs(ratio - Real(4) / 7) < Real("1e-30"), "oracle ratio zeta*(4)/zeta*(2,2) = 4/7");
         });

  report(8, "exact identities with zero residual: eq22=eq17, Bernoulli identity, recurrence, odd B",
         [](Tally& t) {
           t.results("eq22_vs_eq17", 0);
           t.results("bernoulli_id", 0);
           t.results("bernoulli_recurrence", 0);
           t.results("bernoulli_odd", 0);
           for (int k = 1; 2 * k + 1 <= 60; ++k) t.expect(bernoulli(2 * k + 1) == 0, "odd Bernoulli");
         });

  report(9, "hypergeometric identity: 20 random packs and the three specializations below 1e-8", [](Tally& t) {
    int packs = 0;
    for (const auto& r : run_suite("thmA_random", ctx).results) {
      const auto c = check_theorem_a_conditions(
          detail::random_pack(static_cast<int>(iparam(r, "seed")), static_cast<int>(iparam(r, "s"))));
      t.expect(c.ok() && c.c1_margin >= Rational(1, 2) && c.c2_margin >= Rational(1, 2),
               "pack margins below 1/2");
      ++packs;
    }
    t.expect(packs == 20, "expected 20 packs");
    t.results("thmA_random", 1e-8);
    t.results("thmA_special", 1e-8);
  });

  report(10, "duality eq23 below 1e-9; dual involution and weight exhaustive to weight 10",
         [](Tally& t) {
           t.results("duality23", 1e-9);
           int n = 0;
           for (int w = 2; w <= 10; ++w) {
             for (int depth = 1; depth < w; ++depth) {
               for (const auto& c : compositions(w - depth - 1, depth)) {
                 std::vector<int> parts;
                 for (int x : c.parts) parts.push_back(x + 1);
                 parts.back() += 1;
                 const MultiIndex k = make_index(parts);
                 const MultiIndex d = dual_index(k);
                 if (!(dual_index(d) == k) || d.weight() != w) t.note("dual fails at " + k.to_string());
                 ++n;
               }
             }
           }
           t.expect(n == 511, "511 admissible indices up to weight 10");
         });

  report(11, "closed forms eq05 m=0..3 and eq06 below 1e-10; m=0 equals pi^2/12", [](Tally& t) {
    t.results("eq05", 1e-10);
    t.results("eq06", 1e-10);
    Params p;
    p["m"] = Rational(0);
    const auto r = run_check("eq05", p, ctx);
    PrecisionGuard g(ctx);
    t.close(r.lhs->real(), even_zeta(1) / 2, 1e-30, "eq05 m=0 lhs = pi^2/12");
    t.close(r.rhs->real(), even_zeta(1) / 2, 1e-30, "eq05 m=0 rhs = pi^2/12");
  });

  report(12, "alternating sums r<=3 s<=2 below 1e-8 after the symmetric-sum oracle gates", [](Tally& t) {
    for (int a = 2; a <= 4; ++a) {
      for (int b = 2; b <= 4; ++b) {
        const auto za = ZetaPolynomial::zeta(a), zb = ZetaPolynomial::zeta(b);
        t.expect(hoffman_symmetric_reduce({a, b}, SymmetricVariant::star) ==
                     za * zb + ZetaPolynomial::zeta(a + b),
                 "depth-2 star reduction");
        t.expect(hoffman_symmetric_reduce({a, b}, SymmetricVariant::strict) ==
                     za * zb - ZetaPolynomial::zeta(a + b),
                 "depth-2 strict reduction");
      }
    }
    t.results("eq10", 1e-10);
    if (!t.ok) return;
    auto small = [](const IdentityCheckResult& r) { return iparam(r, "r") <= 3 && iparam(r, "s") <= 2; };
    t.results("thm1_sum3", 1e-8, small);
    t.results("thm1_sum4", 1e-8, small);
  });

  std::cout << (failures == 0 ? "all 12 criteria pass" : std::to_string(failures) + " criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
