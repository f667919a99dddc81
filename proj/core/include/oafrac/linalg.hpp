#pragma once

#include <span>
#include <vector>

#include "oafrac/rational.hpp"

namespace oafrac {

// Dense matrix of exact rationals, row major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }
  std::span<const Rational> row(int r) const {
    return {a_.data() + static_cast<size_t>(r) * cols_,
            static_cast<size_t>(cols_)};
  }

  void swap_rows(int a, int b);
  void append_row(std::span<const Rational> v);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Rational inner(std::span<const Rational> u, std::span<const Rational> v);

// Exact Gaussian elimination; no pivoting heuristics are needed for
// correctness, the first nonzero entry is always taken.
int rank(RationalMatrix m);

// Reduced row echelon form with zero rows dropped: unit pivots, pivot columns
// cleared, pivot columns strictly increasing. Canonical for the row space.
RationalMatrix rref(RationalMatrix m);

// Basis, as rows, of {x : m x = 0}.
RationalMatrix nullspace(const RationalMatrix& m);

// Unique solution of a square nonsingular system.
std::vector<Rational> solve_linear(const RationalMatrix& a,
                                   const std::vector<Rational>& rhs);

// A linear subspace of Q^ambient. The basis is stored as the reduced row
// echelon form of the spanning vectors, one basis vector per row, so two
// subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  explicit Subspace(int ambient_dim);  // the zero space
  static Subspace span_of(int ambient_dim, RationalMatrix vectors_as_rows);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  std::span<const Rational> basis_vector(int i) const { return basis_.row(i); }
  bool contains(std::span<const Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(int ambient_dim, RationalMatrix reduced);
  int ambient_ = 0;
  RationalMatrix basis_;
};

enum class SpaceRelation { Equal, Orthogonal, Neither };

struct RelationResult {
  SpaceRelation relation;
  int dim_a = 0;
  int dim_b = 0;
};

// Equal iff the two row spaces coincide, established both by canonical-form
// identity and by rank of the stacked bases (the checks must agree).
// Orthogonal iff every pairwise inner product of basis vectors vanishes.
// Zero-dimensional spaces are Orthogonal to everything and Equal only to zero
// spaces.
RelationResult relate(const Subspace& a, const Subspace& b);

// {x in ambient : x orthogonal to all of sub}; requires sub to be contained
// in ambient. The result dimension is ambient.dim() - sub.dim().
Subspace complement_within(const Subspace& ambient, const Subspace& sub);

}  // namespace oafrac
