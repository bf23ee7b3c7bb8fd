#include <mzvkit/indices.hpp>

#include <algorithm>

namespace mzvkit {

CompositionGenerator::CompositionGenerator(int total, int parts, int min_part)
    : total_(total), min_part_(min_part) {
  if (parts < 1) throw DomainError("compositions: need at least one part");
  if (total < static_cast<long>(parts) * min_part) {
    done_ = true;
    return;
  }
  cur_.assign(static_cast<std::size_t>(parts), min_part);
  cur_.back() = total - (parts - 1) * min_part;
}

std::optional<Composition> CompositionGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Composition{cur_, total_};
  }
  // Lexicographic successor: bump the rightmost slot whose suffix still has
  // units above min_part, then push the remaining excess to the last slot.
  const int n = static_cast<int>(cur_.size());
  int excess = 0;
  int i = n - 2;
  for (; i >= 0; --i) {
    excess += cur_[i + 1] - min_part_;
    if (excess > 0) break;
  }
  if (i < 0) {
    done_ = true;
    return std::nullopt;
  }
  ++cur_[i];
  for (int j = i + 1; j < n - 1; ++j) cur_[j] = min_part_;
  cur_[n - 1] = min_part_ + excess - 1;
  return Composition{cur_, total_};
}

SetPartitionGenerator::SetPartitionGenerator(int k) {
  if (k < 1 || k > max_enumeration_size) throw DomainError("set_partitions: size cap exceeded");
  rgs_.assign(static_cast<std::size_t>(k), 0);
}

std::optional<SetPartition> SetPartitionGenerator::next() {
  if (done_) return std::nullopt;
  if (started_) {
    const int n = static_cast<int>(rgs_.size());
    int i = n - 1;
    for (; i > 0; --i) {
      const int maxprev = *std::max_element(rgs_.begin(), rgs_.begin() + i);
      if (rgs_[i] <= maxprev) break;
    }
    if (i == 0) {
      done_ = true;
      return std::nullopt;
    }
    ++rgs_[i];
    std::fill(rgs_.begin() + i + 1, rgs_.end(), 0);
  }
  started_ = true;
  SetPartition p;
  for (std::size_t e = 0; e < rgs_.size(); ++e) {
    const auto b = static_cast<std::size_t>(rgs_[e]);
    if (p.blocks.size() <= b) p.blocks.resize(b + 1);
    p.blocks[b].push_back(static_cast<int>(e) + 1);
  }
  return p;
}

MultisetPermutationGenerator::MultisetPermutationGenerator(std::vector<int> items)
    : cur_(std::move(items)) {
  if (cur_.size() > static_cast<std::size_t>(max_enumeration_size)) {
    throw DomainError("multiset_permutations: size cap exceeded");
  }
  std::sort(cur_.begin(), cur_.end());
  for (std::size_t i = 0; i < cur_.size();) {
    std::size_t j = i;
    while (j < cur_.size() && cur_[j] == cur_[i]) ++j;
    for (std::size_t f = 2; f <= j - i; ++f) multiplicity_ *= static_cast<long>(f);
    i = j;
  }
}

std::optional<WeightedArrangement> MultisetPermutationGenerator::next() {
  if (done_) return std::nullopt;
  if (started_ && !std::next_permutation(cur_.begin(), cur_.end())) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return WeightedArrangement{cur_, multiplicity_};
}

GeneratorRange<CompositionGenerator> compositions(int total, int parts, int min_part) {
  return GeneratorRange<CompositionGenerator>(CompositionGenerator(total, parts, min_part));
}

GeneratorRange<SetPartitionGenerator> set_partitions(int k) {
  return GeneratorRange<SetPartitionGenerator>(SetPartitionGenerator(k));
}

GeneratorRange<MultisetPermutationGenerator> multiset_permutations(std::vector<int> items) {
  return GeneratorRange<MultisetPermutationGenerator>(
      MultisetPermutationGenerator(std::move(items)));
}

}  // namespace mzvkit
