#pragma once

#include <map>
#include <optional>
#include <vector>

#include "oafrac/factorial.hpp"

namespace oafrac {

// Where a strength check first fails: the lexicographically first factor
// subset K of size t_max + 1 whose projection is not uniform, and the first
// level combination hit the wrong number of times.
struct StrengthWitness {
  std::vector<int> factors;       // K
  std::vector<int> block_levels;  // levels on K identifying the block
  long long hits = 0;             // |B ∩ S|

  friend bool operator==(const StrengthWitness&,
                         const StrengthWitness&) = default;
};

struct StrengthReport {
  int t_max = 0;
  // lambda_I = N / prod_{i in I} s_i for every nonempty I with |I| <= t_max
  // (always an integer there).
  std::map<std::vector<int>, long long> index_by_subset;
  // Common index N / s^t_max for symmetric designs with t_max >= 1.
  std::optional<long long> index;
  // Absent iff t_max = k (the fraction is the full factorial).
  std::optional<StrengthWitness> witness;

  friend bool operator==(const StrengthReport&,
                         const StrengthReport&) = default;
};

// Definition route: project onto every size-t subset and compare every level
// combination's multiplicity against N / prod s_i.
StrengthReport strength_by_projection(const Fraction& f);

// Independence route: check the fraction against the blocking C_I for every
// size-t subset, block by block.
StrengthReport strength_by_independence(const Fraction& f);

// True iff the two routes produce identical reports.
bool cross_check_strength(const Fraction& f);

}  // namespace oafrac
