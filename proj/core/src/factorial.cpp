#include "oafrac/factorial.hpp"

#include <algorithm>

#include "oafrac/errors.hpp"

namespace oafrac {

namespace {
// Enumerability bound for cell indices; the operational ResourceGuard is far
// tighter.
constexpr long long kMaxCells = (1LL << 31) - 1;
}  // namespace

FullFactorial::FullFactorial(std::vector<int> level_counts)
    : levels_(std::move(level_counts)) {
  if (levels_.empty()) throw DomainError("a factorial needs at least one factor");
  for (int s : levels_) {
    if (s < 2) throw DomainError("every factor needs at least 2 levels");
    cell_count_ *= s;
    if (cell_count_ > kMaxCells)
      throw DomainError("cell count exceeds the supported range");
  }
}

int FullFactorial::level_count(int factor) const {
  if (factor < 1 || factor > factor_count())
    throw DomainError("factor index out of range");
  return levels_[factor - 1];
}

bool FullFactorial::symmetric() const {
  return std::all_of(levels_.begin(), levels_.end(),
                     [&](int s) { return s == levels_.front(); });
}

std::vector<int> FullFactorial::cell(long long index) const {
  if (index < 0 || index >= cell_count_)
    throw DomainError("cell index out of range");
  std::vector<int> levels(levels_.size());
  for (int i = factor_count() - 1; i >= 0; --i) {
    levels[i] = static_cast<int>(index % levels_[i]);
    index /= levels_[i];
  }
  return levels;
}

long long FullFactorial::index_of(std::span<const int> levels) const {
  if (static_cast<int>(levels.size()) != factor_count())
    throw DomainError("wrong number of levels for this factorial");
  long long index = 0;
  for (int i = 0; i < factor_count(); ++i) {
    if (levels[i] < 0 || levels[i] >= levels_[i])
      throw DomainError("level out of range");
    index = index * levels_[i] + levels[i];
  }
  return index;
}

std::vector<std::vector<int>> enumerate_cells(const FullFactorial& f) {
  std::vector<std::vector<int>> cells;
  cells.reserve(static_cast<size_t>(f.cell_count()));
  for (long long c = 0; c < f.cell_count(); ++c) cells.push_back(f.cell(c));
  return cells;
}

Fraction::Fraction(FullFactorial parent, std::vector<long long> runs)
    : parent_(std::move(parent)), runs_(std::move(runs)) {
  if (runs_.empty()) throw DomainError("a fraction needs at least one run");
  long long prev = -1;
  for (long long r : runs_) {
    if (r < 0 || r >= parent_.cell_count())
      throw DomainError("run index out of range");
    if (r <= prev)
      throw DomainError("run indices must be strictly increasing");
    prev = r;
  }
}

Fraction Fraction::from_rows(FullFactorial parent,
                             const std::vector<std::vector<int>>& rows) {
  std::vector<long long> runs;
  runs.reserve(rows.size());
  for (const auto& row : rows) runs.push_back(parent.index_of(row));
  std::sort(runs.begin(), runs.end());
  if (std::adjacent_find(runs.begin(), runs.end()) != runs.end())
    throw InvalidDesignError("non-simple design: duplicate run");
  return Fraction(std::move(parent), std::move(runs));
}

std::vector<int> Fraction::run_levels(long long i) const {
  if (i < 0 || i >= run_count()) throw DomainError("run number out of range");
  return parent_.cell(runs_[static_cast<size_t>(i)]);
}

bool Fraction::contains(long long cell_index) const {
  return std::binary_search(runs_.begin(), runs_.end(), cell_index);
}

std::vector<std::vector<int>> subsets_of_size(int k, int size) {
  if (k < 0 || size < 0 || size > k)
    throw DomainError("invalid subset size");
  std::vector<std::vector<int>> out;
  if (size == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur(size);
  for (int i = 0; i < size; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[i] == k - size + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace oafrac
