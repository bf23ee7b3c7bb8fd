#ifndef MZVKIT_TEST_HELPERS_HPP
#define MZVKIT_TEST_HELPERS_HPP

#include <mzvkit/numerics.hpp>
#include <mzvkit/types.hpp>

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

namespace mzvkit::test {

inline PrecisionContext ctx40() { return PrecisionContext{}; }

/// |x - y| as a double, evaluated under the caller's guard.
inline double gap(const Real& x, const Real& y) { return abs(x - y).convert_to<double>(); }
inline double gap(const BigReal& x, const Real& y) { return gap(x.value, y); }
inline double gap(const BigReal& x, const BigReal& y) { return gap(x.value, y.value); }

/// Reference constants to 50 digits.
inline Real ref(const char* digits) { return Real(digits); }
constexpr const char* zeta3 = "1.2020569031595942853997381615114499907649862923405";
constexpr const char* zeta5 = "1.0369277551433699263313654864570341680570809195019";
constexpr const char* ln2 = "0.69314718055994530941723212145817656807550013436026";
constexpr const char* pi = "3.1415926535897932384626433832795028841971693993751";
constexpr const char* euler_gamma = "0.57721566490153286060651209008240243104215933593992";

/// Seeded generator for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Exponent vector of the given depth with entries in [lo, hi].
  std::vector<int> exponents(int depth, int lo, int hi) {
    std::vector<int> v(static_cast<std::size_t>(depth));
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  /// Admissible strict exponents (last entry >= 2) of the given weight.
  std::vector<int> admissible(int weight) {
    std::vector<int> v;
    int left = weight;
    while (left > 2) {
      const int k = uniform(1, left - 2);
      v.push_back(k);
      left -= k;
      if (coin()) break;
    }
    v.push_back(left);
    return v;
  }

  Rational rational(int num_lo, int num_hi, int den_hi) {
    return Rational(uniform(num_lo, num_hi), uniform(1, den_hi));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace mzvkit::test

#endif  // MZVKIT_TEST_HELPERS_HPP
