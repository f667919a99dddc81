#include "oafrac/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "oafrac/errors.hpp"

namespace oafrac {

Partition::Partition(FullFactorial parent, const std::vector<int>& labels)
    : parent_(std::move(parent)) {
  if (static_cast<long long>(labels.size()) != parent_.cell_count())
    throw DomainError("one label per cell required");
  block_of_.resize(labels.size());
  std::unordered_map<int, int> remap;
  remap.reserve(labels.size());
  for (size_t c = 0; c < labels.size(); ++c) {
    auto [it, inserted] =
        remap.try_emplace(labels[c], static_cast<int>(remap.size()));
    block_of_[c] = it->second;
    if (inserted)
      block_sizes_.push_back(0);
    block_sizes_[it->second] += 1;
  }
  block_count_ = static_cast<int>(remap.size());
}

std::vector<long long> Partition::block_cells(int block) const {
  if (block < 0 || block >= block_count_)
    throw DomainError("block id out of range");
  std::vector<long long> cells;
  cells.reserve(static_cast<size_t>(block_sizes_[block]));
  for (long long c = 0; c < static_cast<long long>(block_of_.size()); ++c)
    if (block_of_[c] == block) cells.push_back(c);
  return cells;
}

namespace {

std::vector<int> normalized_subset(const FullFactorial& f,
                                   std::vector<int> factors) {
  if (factors.empty())
    throw DomainError("factor subset must be nonempty");
  std::sort(factors.begin(), factors.end());
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 1 || factors[i] > f.factor_count())
      throw DomainError("factor index out of range");
    if (i > 0 && factors[i] == factors[i - 1])
      throw DomainError("factor subset has a repeated index");
  }
  return factors;
}

}  // namespace

Partition blocking_for(const FullFactorial& f,
                       const std::vector<int>& factors) {
  const std::vector<int> I = normalized_subset(f, factors);
  std::vector<int> labels(static_cast<size_t>(f.cell_count()));
  for (long long c = 0; c < f.cell_count(); ++c) {
    const std::vector<int> cell = f.cell(c);
    long long rank = 0;
    for (int i : I) rank = rank * f.level_count(i) + cell[i - 1];
    labels[static_cast<size_t>(c)] = static_cast<int>(rank);
  }
  return Partition(f, labels);
}

Partition join(const Partition& p, const Partition& q) {
  if (!(p.parent() == q.parent()))
    throw DomainError("join requires partitions of the same factorial");
  const long long n = p.parent().cell_count();
  std::vector<int> labels(static_cast<size_t>(n));
  for (long long c = 0; c < n; ++c)
    labels[static_cast<size_t>(c)] =
        p.block_of(c) * q.block_count() + q.block_of(c);
  return Partition(p.parent(), labels);
}

Rational pi(const FullFactorial& f, const std::vector<long long>& cells) {
  long long prev = -1;
  for (long long c : cells) {
    if (c < 0 || c >= f.cell_count())
      throw DomainError("cell index out of range");
    if (c <= prev)
      throw DomainError("cell set must be strictly increasing");
    prev = c;
  }
  return make_rational(static_cast<long long>(cells.size()), f.cell_count());
}

IndependenceCheck is_independent(const FullFactorial& f,
                                 const std::vector<long long>& cells,
                                 const Partition& p) {
  if (!(p.parent() == f))
    throw DomainError("partition belongs to a different factorial");
  // Validates the cell set as a side effect.
  (void)pi(f, cells);
  std::vector<long long> hit(static_cast<size_t>(p.block_count()), 0);
  for (long long c : cells) hit[static_cast<size_t>(p.block_of(c))] += 1;
  const long long total = f.cell_count();
  const long long size = static_cast<long long>(cells.size());
  for (int b = 0; b < p.block_count(); ++b) {
    if (hit[static_cast<size_t>(b)] * total != size * p.block_size(b))
      return {false, b};
  }
  return {true, -1};
}

}  // namespace oafrac
