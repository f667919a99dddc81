#include "oafrac/strength.hpp"

#include <algorithm>

#include "oafrac/errors.hpp"
#include "oafrac/partition.hpp"

namespace oafrac {

namespace {

long long subset_cell_product(const FullFactorial& f,
                              const std::vector<int>& I) {
  long long prod = 1;
  for (int i : I) prod *= f.level_count(i);
  return prod;
}

void fill_common_index(const Fraction& f, StrengthReport* report) {
  if (report->t_max >= 1 && f.parent().symmetric()) {
    long long denom = 1;
    for (int t = 0; t < report->t_max; ++t) denom *= f.parent().level_count(1);
    report->index = f.run_count() / denom;
  }
}

}  // namespace

StrengthReport strength_by_projection(const Fraction& f) {
  const FullFactorial& parent = f.parent();
  const int k = parent.factor_count();
  const long long n = f.run_count();
  StrengthReport report;
  for (int t = 1; t <= k; ++t) {
    bool level_ok = true;
    std::map<std::vector<int>, long long> level_indices;
    for (const std::vector<int>& I : subsets_of_size(k, t)) {
      const long long cells = subset_cell_product(parent, I);
      // Multiplicity of every level combination on I, in lexicographic
      // order of the combinations.
      std::vector<long long> counts(static_cast<size_t>(cells), 0);
      for (long long r = 0; r < n; ++r) {
        const std::vector<int> x = f.run_levels(r);
        long long rank = 0;
        for (int i : I) rank = rank * parent.level_count(i) + x[i - 1];
        counts[static_cast<size_t>(rank)] += 1;
      }
      long long failing = -1;
      for (long long b = 0; b < cells; ++b)
        if (counts[static_cast<size_t>(b)] * cells != n) {
          failing = b;
          break;
        }
      if (failing >= 0) {
        report.witness = StrengthWitness{};
        report.witness->factors = I;
        report.witness->hits = counts[static_cast<size_t>(failing)];
        std::vector<int> levels(I.size());
        long long rest = failing;
        for (size_t j = I.size(); j-- > 0;) {
          const int s = parent.level_count(I[j]);
          levels[j] = static_cast<int>(rest % s);
          rest /= s;
        }
        report.witness->block_levels = std::move(levels);
        level_ok = false;
        break;
      }
      level_indices[I] = n / cells;
    }
    if (!level_ok) break;
    report.t_max = t;
    report.index_by_subset.merge(level_indices);
  }
  fill_common_index(f, &report);
  return report;
}

StrengthReport strength_by_independence(const Fraction& f) {
  const FullFactorial& parent = f.parent();
  const int k = parent.factor_count();
  const long long n = f.run_count();
  StrengthReport report;
  for (int t = 1; t <= k; ++t) {
    bool level_ok = true;
    std::map<std::vector<int>, long long> level_indices;
    for (const std::vector<int>& I : subsets_of_size(k, t)) {
      const Partition blocking = blocking_for(parent, I);
      const IndependenceCheck check = is_independent(parent, f.runs(), blocking);
      if (!check.independent) {
        // Blocks of C_I appear in canonical cell order, which for the
        // blocking of a factor subset is the lexicographic order of the
        // level combinations on I; decode the failing block accordingly.
        report.witness = StrengthWitness{};
        report.witness->factors = I;
        std::vector<int> levels(I.size());
        long long rest = check.failing_block;
        for (size_t j = I.size(); j-- > 0;) {
          const int s = parent.level_count(I[j]);
          levels[j] = static_cast<int>(rest % s);
          rest /= s;
        }
        report.witness->block_levels = levels;
        long long hits = 0;
        for (long long r = 0; r < n; ++r) {
          const std::vector<int> x = f.run_levels(r);
          bool in_block = true;
          for (size_t j = 0; j < I.size() && in_block; ++j)
            in_block = (x[I[j] - 1] == levels[j]);
          if (in_block) hits += 1;
        }
        report.witness->hits = hits;
        level_ok = false;
        break;
      }
      level_indices[I] = n / subset_cell_product(parent, I);
    }
    if (!level_ok) break;
    report.t_max = t;
    report.index_by_subset.merge(level_indices);
  }
  fill_common_index(f, &report);
  return report;
}

bool cross_check_strength(const Fraction& f) {
  return strength_by_projection(f) == strength_by_independence(f);
}

}  // namespace oafrac
