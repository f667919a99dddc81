#pragma once

#include <vector>

#include "oafrac/factorial.hpp"
#include "oafrac/rational.hpp"

namespace oafrac {

// A blocking (set partition) of the cells of a full factorial. Block ids are
// 0..block_count-1 in order of first appearance along the canonical cell
// order; every block is nonempty. Two partitions compare equal iff they have
// the same parent and induce the same blocks.
class Partition {
 public:
  // labels may be arbitrary integers, one per cell; they are relabeled to the
  // canonical first-appearance numbering.
  Partition(FullFactorial parent, const std::vector<int>& labels);

  const FullFactorial& parent() const { return parent_; }
  int block_count() const { return block_count_; }
  int block_of(long long cell) const { return block_of_[cell]; }
  const std::vector<int>& block_labels() const { return block_of_; }
  long long block_size(int block) const { return block_sizes_[block]; }
  std::vector<long long> block_cells(int block) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parent_ == b.parent_ && a.block_of_ == b.block_of_;
  }

 private:
  FullFactorial parent_;
  std::vector<int> block_of_;
  std::vector<long long> block_sizes_;
  int block_count_ = 0;
};

// C_I: cells share a block iff they agree on every factor in I. The subset is
// 1-based and must be nonempty; the trivial one-block partition is not a
// public object.
Partition blocking_for(const FullFactorial& f, const std::vector<int>& factors);

// Coarsest common refinement: blocks are the nonempty pairwise intersections.
Partition join(const Partition& p, const Partition& q);

// Uniform measure |A|/|T| of a cell set, exact. cells must be strictly
// increasing and in range.
Rational pi(const FullFactorial& f, const std::vector<long long>& cells);

struct IndependenceCheck {
  bool independent = false;
  // First block violating |A ∩ C| |T| = |A| |C|, when not independent.
  int failing_block = -1;
};

// Combinatorial independence of a cell set from a blocking, checked exactly
// block by block in block order.
IndependenceCheck is_independent(const FullFactorial& f,
                                 const std::vector<long long>& cells,
                                 const Partition& p);

}  // namespace oafrac
