#pragma once

#include <span>
#include <vector>

namespace oafrac {

// A full factorial: k factors, factor i taking the levels 0..s_i-1. Cells are
// identified with their rank in lexicographic order with factor 1 most
// significant, so a 3^3 design enumerates 000, 001, 002, 010, ...
class FullFactorial {
 public:
  explicit FullFactorial(std::vector<int> level_counts);

  int factor_count() const { return static_cast<int>(levels_.size()); }
  const std::vector<int>& level_counts() const { return levels_; }

  // factor is 1-based, as everywhere in the public interface.
  int level_count(int factor) const;

  long long cell_count() const { return cell_count_; }
  bool symmetric() const;

  std::vector<int> cell(long long index) const;
  long long index_of(std::span<const int> levels) const;

  friend bool operator==(const FullFactorial& a, const FullFactorial& b) {
    return a.levels_ == b.levels_;
  }

 private:
  std::vector<int> levels_;
  long long cell_count_ = 1;
};

// All cells in canonical order.
std::vector<std::vector<int>> enumerate_cells(const FullFactorial& f);

// A simple fraction: a nonempty subset of the cells of its parent factorial,
// held as strictly increasing cell indices. Multisets are rejected at every
// construction boundary.
class Fraction {
 public:
  Fraction(FullFactorial parent, std::vector<long long> runs);

  // Encodes, sorts and checks the rows; duplicates raise InvalidDesignError.
  static Fraction from_rows(FullFactorial parent,
                            const std::vector<std::vector<int>>& rows);

  const FullFactorial& parent() const { return parent_; }
  long long run_count() const { return static_cast<long long>(runs_.size()); }
  const std::vector<long long>& runs() const { return runs_; }
  std::vector<int> run_levels(long long i) const;
  bool contains(long long cell_index) const;
  bool is_full() const { return run_count() == parent_.cell_count(); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.parent_ == b.parent_ && a.runs_ == b.runs_;
  }

 private:
  FullFactorial parent_;
  std::vector<long long> runs_;
};

// The size-t subsets of {1..k} in lexicographic order; size 0 yields the
// single empty subset.
std::vector<std::vector<int>> subsets_of_size(int k, int size);

}  // namespace oafrac
