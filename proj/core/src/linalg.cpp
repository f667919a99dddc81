#include "oafrac/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "oafrac/errors.hpp"

namespace oafrac {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw DomainError("matrix dimensions must be nonnegative");
  a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols),
            Rational(0));
}

void RationalMatrix::swap_rows(int a, int b) {
  if (a < 0 || a >= rows_ || b < 0 || b >= rows_)
    throw DomainError("row index out of range");
  if (a == b) return;
  for (int c = 0; c < cols_; ++c)
    std::swap(a_[static_cast<size_t>(a) * cols_ + c],
              a_[static_cast<size_t>(b) * cols_ + c]);
}

void RationalMatrix::append_row(std::span<const Rational> v) {
  if (static_cast<int>(v.size()) != cols_)
    throw DomainError("appended row has wrong length");
  a_.insert(a_.end(), v.begin(), v.end());
  rows_ += 1;
}

Rational inner(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size())
    throw DomainError("inner product requires equal lengths");
  Rational sum(0);
  for (size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
  return sum;
}

RationalMatrix rref(RationalMatrix m) {
  int pivot_rows = 0;
  for (int c = 0; c < m.cols() && pivot_rows < m.rows(); ++c) {
    int pivot = -1;
    for (int r = pivot_rows; r < m.rows(); ++r) {
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.swap_rows(pivot_rows, pivot);
    const Rational inv = Rational(1) / m.at(pivot_rows, c);
    for (int cc = c; cc < m.cols(); ++cc) m.at(pivot_rows, cc) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pivot_rows) continue;
      const Rational factor = m.at(r, c);
      if (factor == 0) continue;
      for (int cc = c; cc < m.cols(); ++cc)
        m.at(r, cc) -= factor * m.at(pivot_rows, cc);
    }
    pivot_rows += 1;
  }
  RationalMatrix out(0, m.cols());
  for (int r = 0; r < pivot_rows; ++r) out.append_row(m.row(r));
  return out;
}

int rank(RationalMatrix m) { return rref(std::move(m)).rows(); }

RationalMatrix nullspace(const RationalMatrix& m) {
  const RationalMatrix r = rref(m);
  const int n = m.cols();
  std::vector<int> pivot_col(static_cast<size_t>(r.rows()));
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int i = 0; i < r.rows(); ++i) {
    int c = 0;
    while (c < n && r.at(i, c) == 0) ++c;
    pivot_col[static_cast<size_t>(i)] = c;
    is_pivot[static_cast<size_t>(c)] = true;
  }
  RationalMatrix basis(0, n);
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<size_t>(n), Rational(0));
    v[static_cast<size_t>(free)] = 1;
    for (int i = 0; i < r.rows(); ++i)
      v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
          -r.at(i, free);
    basis.append_row(v);
  }
  return basis;
}

std::vector<Rational> solve_linear(const RationalMatrix& a,
                                   const std::vector<Rational>& rhs) {
  if (static_cast<int>(rhs.size()) != a.rows())
    throw DomainError("right-hand side length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = rhs[static_cast<size_t>(r)];
  }
  const RationalMatrix red = rref(std::move(aug));
  std::vector<Rational> x(static_cast<size_t>(a.cols()), Rational(0));
  for (int i = 0; i < red.rows(); ++i) {
    int c = 0;
    while (c <= a.cols() && red.at(i, c) == 0) ++c;
    if (c == a.cols()) throw DomainError("linear system has no solution");
    x[static_cast<size_t>(c)] = red.at(i, a.cols());
  }
  return x;
}

Subspace::Subspace(int ambient_dim)
    : Subspace(ambient_dim, RationalMatrix(0, ambient_dim)) {}

Subspace::Subspace(int ambient_dim, RationalMatrix reduced)
    : ambient_(ambient_dim), basis_(std::move(reduced)) {}

Subspace Subspace::span_of(int ambient_dim, RationalMatrix vectors_as_rows) {
  if (vectors_as_rows.cols() != ambient_dim)
    throw DomainError("spanning rows must live in the ambient space");
  return Subspace(ambient_dim, rref(std::move(vectors_as_rows)));
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw DomainError("vector has wrong dimension");
  std::vector<Rational> w(v.begin(), v.end());
  for (int i = 0; i < basis_.rows(); ++i) {
    int c = 0;
    while (c < ambient_ && basis_.at(i, c) == 0) ++c;
    if (c == ambient_) continue;
    const Rational factor = w[static_cast<size_t>(c)];
    if (factor == 0) continue;
    for (int cc = c; cc < ambient_; ++cc)
      w[static_cast<size_t>(cc)] -= factor * basis_.at(i, cc);
  }
  for (const Rational& x : w)
    if (x != 0) return false;
  return true;
}

RelationResult relate(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DomainError("subspaces live in different ambient spaces");
  RelationResult res{SpaceRelation::Neither, a.dim(), b.dim()};
  if (a.dim() == 0 && b.dim() == 0) {
    res.relation = SpaceRelation::Equal;
    return res;
  }
  if (a.dim() == 0 || b.dim() == 0) {
    res.relation = SpaceRelation::Orthogonal;
    return res;
  }
  bool all_orthogonal = true;
  for (int i = 0; i < a.dim() && all_orthogonal; ++i)
    for (int j = 0; j < b.dim(); ++j)
      if (inner(a.basis_vector(i), b.basis_vector(j)) != 0) {
        all_orthogonal = false;
        break;
      }
  if (all_orthogonal) {
    res.relation = SpaceRelation::Orthogonal;
    return res;
  }
  if (a.dim() == b.dim()) {
    const bool canonical_equal = (a.basis() == b.basis());
    RationalMatrix stacked = a.basis();
    for (int j = 0; j < b.dim(); ++j) stacked.append_row(b.basis_vector(j));
    const bool rank_equal = (rank(std::move(stacked)) == a.dim());
    if (canonical_equal != rank_equal)
      throw std::logic_error("subspace equality checks disagree");
    if (canonical_equal) {
      res.relation = SpaceRelation::Equal;
      return res;
    }
  }
  return res;
}

Subspace complement_within(const Subspace& ambient, const Subspace& sub) {
  if (ambient.ambient_dim() != sub.ambient_dim())
    throw DomainError("subspaces live in different ambient spaces");
  {
    RationalMatrix stacked = ambient.basis();
    for (int j = 0; j < sub.dim(); ++j) stacked.append_row(sub.basis_vector(j));
    if (rank(std::move(stacked)) != ambient.dim())
      throw DomainError("complement requires the subspace to be contained");
  }
  if (sub.dim() == 0) return ambient;
  // Rows of m hold the inner products of each sub basis vector against each
  // ambient basis vector; a nullspace combination of the ambient basis is
  // therefore orthogonal to all of sub.
  RationalMatrix m(sub.dim(), ambient.dim());
  for (int j = 0; j < sub.dim(); ++j)
    for (int i = 0; i < ambient.dim(); ++i)
      m.at(j, i) = inner(sub.basis_vector(j), ambient.basis_vector(i));
  const RationalMatrix combos = nullspace(m);
  RationalMatrix rows(0, ambient.ambient_dim());
  for (int r = 0; r < combos.rows(); ++r) {
    std::vector<Rational> v(static_cast<size_t>(ambient.ambient_dim()),
                            Rational(0));
    for (int i = 0; i < ambient.dim(); ++i) {
      const Rational coeff = combos.at(r, i);
      if (coeff == 0) continue;
      auto bv = ambient.basis_vector(i);
      for (int c = 0; c < ambient.ambient_dim(); ++c)
        v[static_cast<size_t>(c)] += coeff * bv[static_cast<size_t>(c)];
    }
    rows.append_row(v);
  }
  Subspace result = Subspace::span_of(ambient.ambient_dim(), std::move(rows));
  if (result.dim() != ambient.dim() - sub.dim())
    throw std::logic_error("orthogonal complement has unexpected dimension");
  return result;
}

}  // namespace oafrac
