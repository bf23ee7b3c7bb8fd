#ifndef MZVKIT_INDICES_HPP
#define MZVKIT_INDICES_HPP

#include <mzvkit/types.hpp>

#include <cstddef>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mzvkit {

/// Exponents (k_1, ..., k_n), innermost summation variable first. The sign
/// multiplies the outermost variable as z^(m_n - 1).
struct MultiIndex {
  std::vector<int> parts;
  bool strict = true;
  int sign = 1;

  int weight() const;
  int depth() const { return static_cast<int>(parts.size()); }
  bool admissible() const;
  /// Canonical form, e.g. "zsa(1,1,3)".
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

MultiIndex make_index(std::vector<int> parts, bool strict = true, int sign = 1);

/// Grammar: prefix ("z" | "zs" | "za" | "zsa") "(" entry ("," entry)* ")",
/// entry = integer | "{" integer "}^" integer. Whitespace is ignored.
/// Throws ParseError on syntax errors and on inadmissible indices.
MultiIndex parse_index(std::string_view text);

/// Dual index under reversal and complement of the binary word
/// 1 0^(k_1 - 1) 1 0^(k_2 - 1) ... ; requires a strict index with sign +1.
MultiIndex dual_index(const MultiIndex& k);

struct HurwitzIndex {
  std::vector<int> parts;
  Rational alpha{1};

  void validate() const;
};

struct Composition {
  std::vector<int> parts;
  int total = 0;
};

struct SetPartition {
  /// Blocks of {1..k}, each sorted, ordered by smallest element.
  std::vector<std::vector<int>> blocks;
};

struct WeightedArrangement {
  std::vector<int> items;
  long multiplicity = 0;
};

/// Input range over a generator exposing `std::optional<T> next()`.
template <class Generator>
class GeneratorRange {
 public:
  using value_type = typename decltype(std::declval<Generator&>().next())::value_type;

  explicit GeneratorRange(Generator g) : gen_(std::move(g)) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = GeneratorRange::value_type;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = const value_type&;

    iterator() = default;
    explicit iterator(Generator* g) : gen_(g) { ++*this; }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = gen_->next();
      if (!current_) gen_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.gen_ == b.gen_; }

   private:
    Generator* gen_ = nullptr;
    std::optional<value_type> current_;
  };

  iterator begin() { return iterator(&gen_); }
  iterator end() { return iterator(); }

 private:
  Generator gen_;
};

class CompositionGenerator {
 public:
  CompositionGenerator(int total, int parts, int min_part);
  std::optional<Composition> next();

 private:
  int total_;
  int min_part_;
  std::vector<int> cur_;
  bool started_ = false;
  bool done_ = false;
};

class SetPartitionGenerator {
 public:
  explicit SetPartitionGenerator(int k);
  std::optional<SetPartition> next();

 private:
  std::vector<int> rgs_;  // restricted growth string
  bool started_ = false;
  bool done_ = false;
};

class MultisetPermutationGenerator {
 public:
  explicit MultisetPermutationGenerator(std::vector<int> items);
  std::optional<WeightedArrangement> next();

 private:
  std::vector<int> cur_;
  long multiplicity_ = 1;
  bool started_ = false;
  bool done_ = false;
};

/// Sequences of `parts` integers >= min_part summing to `total`, in
/// lexicographic order.
GeneratorRange<CompositionGenerator> compositions(int total, int parts, int min_part = 0);

inline constexpr int max_enumeration_size = 8;

/// Set partitions of {1..k}; k <= 8.
GeneratorRange<SetPartitionGenerator> set_partitions(int k);

/// Distinct arrangements of `items` with their multiplicity in the full
/// symmetric-group orbit; length <= 8.
GeneratorRange<MultisetPermutationGenerator> multiset_permutations(std::vector<int> items);

}  // namespace mzvkit

#endif  // MZVKIT_INDICES_HPP
