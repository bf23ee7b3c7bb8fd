#include "helpers.hpp"

#include <mzvkit/indices.hpp>

#include <set>

using namespace mzvkit;

namespace {

std::vector<std::vector<int>> all_admissible(int weight) {
  std::vector<std::vector<int>> out;
  // Compositions of weight with last part >= 2, by depth.
  for (int depth = 1; depth < weight; ++depth) {
    for (const auto& c : compositions(weight - depth - 1, depth)) {
      std::vector<int> v;
      for (int x : c.parts) v.push_back(x + 1);
      v.back() += 1;
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("indices") {

TEST_CASE("grammar") {
  const auto k = parse_index("z(2)");
  CHECK(k.strict);
  CHECK(k.sign == 1);
  CHECK(k.parts == std::vector<int>{2});

  const auto a = parse_index("za({1}^2,4)");
  CHECK(a.strict);
  CHECK(a.sign == -1);
  CHECK(a.parts == std::vector<int>{1, 1, 4});

  const auto s = parse_index(" zsa ( {1}^2 , 3 ) ");
  CHECK_FALSE(s.strict);
  CHECK(s.sign == -1);
  CHECK(s.to_string() == "zsa(1,1,3)");

  CHECK(parse_index("zs({2}^3)").parts == std::vector<int>{2, 2, 2});
  CHECK(parse_index("z({1}^0,5)").parts == std::vector<int>{5});
}

TEST_CASE("grammar errors") {
  CHECK_THROWS_AS(parse_index("zs(1)"), ParseError);
  CHECK_THROWS_AS(parse_index("zz(2)"), ParseError);
  CHECK_THROWS_AS(parse_index("z()"), ParseError);
  CHECK_THROWS_AS(parse_index("z(2"), ParseError);
  CHECK_THROWS_AS(parse_index("z(0,2)"), ParseError);
  CHECK_THROWS_AS(parse_index("z({2}3)"), ParseError);
  CHECK_THROWS_AS(parse_index("z(2)x"), ParseError);
  CHECK_THROWS_AS(parse_index("z"), ParseError);
}

TEST_CASE("canonical strings round-trip") {
  for (const char* text : {"z(2)", "zs(1,3)", "za(1,1,4)", "zsa(2,2)"}) {
    CHECK(parse_index(text).to_string() == text);
  }
}

TEST_CASE("dual index examples") {
  CHECK(dual_index(make_index({2})).parts == std::vector<int>{2});
  CHECK(dual_index(make_index({3})).parts == std::vector<int>{1, 2});
  CHECK(dual_index(make_index({1, 1, 4})).parts == std::vector<int>{1, 1, 4});
  // ({1}^l, k+2) <-> ({1}^k, l+2)
  for (int l = 0; l <= 3; ++l) {
    for (int k = 0; k <= 3; ++k) {
      std::vector<int> x(static_cast<std::size_t>(l), 1);
      x.push_back(k + 2);
      std::vector<int> y(static_cast<std::size_t>(k), 1);
      y.push_back(l + 2);
      CHECK(dual_index(make_index(x)).parts == y);
    }
  }
  CHECK_THROWS_AS(dual_index(make_index({2}, false)), DomainError);
  CHECK_THROWS_AS(dual_index(make_index({2}, true, -1)), DomainError);
}

TEST_CASE("dual index is a weight-preserving involution up to weight 10") {
  int count = 0;
  for (int w = 2; w <= 10; ++w) {
    const auto all = all_admissible(w);
    CHECK(all.size() == (std::size_t{1} << (w - 2)));
    for (const auto& parts : all) {
      const MultiIndex k = make_index(parts);
      const MultiIndex d = dual_index(k);
      CHECK(d.weight() == w);
      CHECK(d.admissible());
      CHECK(dual_index(d) == k);
      ++count;
    }
  }
  CHECK(count == 511);
}

TEST_CASE("compositions") {
  std::vector<std::vector<int>> seen;
  for (const auto& c : compositions(2, 2)) seen.push_back(c.parts);
  CHECK(seen == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});

  seen.clear();
  for (const auto& c : compositions(0, 3)) seen.push_back(c.parts);
  CHECK(seen == std::vector<std::vector<int>>{{0, 0, 0}});

  for (int total = 0; total <= 8; ++total) {
    for (int parts = 1; parts <= 5; ++parts) {
      long n = 0;
      std::set<std::vector<int>> distinct;
      for (const auto& c : compositions(total, parts)) {
        ++n;
        distinct.insert(c.parts);
        CHECK(c.total == total);
      }
      CHECK(Rational(n) == binomial(total + parts - 1, parts - 1));
      CHECK(distinct.size() == static_cast<std::size_t>(n));
    }
  }
  long with_min = 0;
  for (const auto& c : compositions(5, 3, 1)) {
    for (int x : c.parts) CHECK(x >= 1);
    ++with_min;
  }
  CHECK(with_min == 6);
}

TEST_CASE("set partitions follow the Bell numbers") {
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int k = 1; k <= 8; ++k) {
    long n = 0;
    for (const auto& p : set_partitions(k)) {
      int covered = 0;
      for (const auto& b : p.blocks) covered += static_cast<int>(b.size());
      CHECK(covered == k);
      ++n;
    }
    CHECK(n == bell[k]);
  }
}

TEST_CASE("multiset permutations") {
  auto collect = [](std::vector<int> items) {
    std::vector<std::pair<std::vector<int>, long>> out;
    for (const auto& a : multiset_permutations(std::move(items))) out.emplace_back(a.items, a.multiplicity);
    return out;
  };
  const auto a = collect({2, 2});
  REQUIRE(a.size() == 1);
  CHECK(a[0].second == 2);
  const auto b = collect({2, 3});
  REQUIRE(b.size() == 2);
  CHECK(b[0].second == 1);
  const auto c = collect({2, 2, 3});
  REQUIRE(c.size() == 3);
  for (const auto& [items, mult] : c) CHECK(mult == 2);

  mzvkit::test::Gen gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int len = gen.uniform(1, 6);
    auto items = gen.exponents(len, 1, 3);
    long total = 0;
    std::set<std::vector<int>> distinct;
    for (const auto& arr : multiset_permutations(items)) {
      total += arr.multiplicity;
      distinct.insert(arr.items);
    }
    CHECK(Rational(total) == Rational(factorial(len)));
    CHECK(distinct.size() == collect(items).size());
  }
}

}  // TEST_SUITE
