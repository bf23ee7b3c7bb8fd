#ifndef MZVKIT_SUITE_HPP
#define MZVKIT_SUITE_HPP

#include <mzvkit/numerics.hpp>

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mzvkit {

/// Check parameters: integers and rationals share the rational slot; a few
/// checks take a named choice (coefficient variant, index text, family).
using ParamValue = std::variant<Rational, std::string>;
using Params = std::map<std::string, ParamValue>;

std::string to_string(const ParamValue& v);

/// One side of an identity: exact rational or a value with an error bound.
struct SideValue {
  bool exact = false;
  Rational q;
  BigReal x;

  static SideValue exact_value(Rational q);
  static SideValue approx(BigReal x);

  /// Numerical view at the working precision (exact values have err 0).
  BigReal real() const;
};

enum class CheckStatus { pass, fail, reported };
std::string to_string(CheckStatus s);
CheckStatus parse_status(const std::string& s);

struct IdentityCheckResult {
  std::string check_id;
  Params params;
  std::optional<SideValue> lhs;
  std::optional<SideValue> rhs;
  /// Exact residuals are kept as rationals; numeric ones as reals.
  std::optional<SideValue> abs_residual;
  std::optional<SideValue> rel_residual;
  double tolerance = 0;
  CheckStatus status = CheckStatus::fail;
  long wall_ms = 0;
  /// Failure diagnostic; not part of the JSON record.
  std::string reason;
  /// Significant digits used when rendering reals.
  int digits = 40;
};

/// Fills residuals and the verdict. Status is pass iff abs <= tol, or
/// rel <= tol when |rhs| > 1; `reported` replaces pass/fail when set.
void finalize(IdentityCheckResult& r, bool reported);

using json = nlohmann::ordered_json;

json to_json(const IdentityCheckResult& r);
/// Inverse of to_json; the result re-serializes to the same text.
IdentityCheckResult result_from_json(const json& j);
json report_json(const std::vector<IdentityCheckResult>& results);

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------
class UnknownCheckError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct ParamSpec {
  enum class Kind { integer, rational, choice };

  std::string name;
  Kind kind = Kind::integer;
  Rational lo{0};
  Rational hi{0};
  std::vector<std::string> choices;

  static ParamSpec integer(std::string name, long lo, long hi);
  static ParamSpec rational(std::string name, Rational lo, Rational hi);
  static ParamSpec choice(std::string name, std::vector<std::string> options);
};

struct Evaluation {
  SideValue lhs;
  SideValue rhs;
  double tolerance = 1e-9;
  bool reported = false;
};

struct CheckSpec {
  std::string check_id;
  std::string summary;
  std::vector<ParamSpec> params;
  std::vector<Params> grid;
  std::function<Evaluation(const Params&, const PrecisionContext&)> evaluate;
};

/// All registered checks, sorted by id.
const std::vector<CheckSpec>& registry();
const CheckSpec& find_check(const std::string& id);

/// Throws UnknownCheckError or std::invalid_argument (bad parameters).
/// Evaluation failures are recorded as status fail with a reason.
IdentityCheckResult run_check(const std::string& id, const Params& params,
                              const PrecisionContext& ctx);

struct SuiteReport {
  std::vector<IdentityCheckResult> results;
  int passed = 0;
  int failed = 0;
  int reported = 0;
};

/// Every check whose id matches the glob `filter` ("all" or empty matches
/// everything), over its default grid, ordered by id then grid position.
/// Throws UnknownCheckError when nothing matches.
SuiteReport run_suite(const std::string& filter, const PrecisionContext& ctx);

bool glob_match(const std::string& pattern, const std::string& text);

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------
enum class Theorem1Sum { sum3, sum4 };

/// The alternating sum against its reduced zeta polynomial.
IdentityCheckResult theorem1_pipeline(int r, int s, Theorem1Sum which, const PrecisionContext& ctx);

/// Each link of the chain for zeta-star(4, {2}^(s-1)): the weighted sum
/// identity, the even-zeta rewrite, the telescoped and Bernoulli forms of
/// the middle sum, and the final expression under all three coefficients.
std::vector<IdentityCheckResult> theorem3_pipeline(int s, const PrecisionContext& ctx);

}  // namespace mzvkit

#endif  // MZVKIT_SUITE_HPP
