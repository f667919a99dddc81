#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oafrac/factorial.hpp"

namespace oafrac {

bool is_prime(int n);
bool is_prime_power(int n, int* p = nullptr, int* m = nullptr);

// Finite coefficient structure for defining equations: either the field
// GF(p^m) or the modular integers Z/n. Elements are coded 0..order-1. For
// GF(p^m) the code is the ranked polynomial order: the base-p digits of the
// code are the polynomial coefficients, digit j being the coefficient of x^j.
// Operation tables are built once at construction.
class Ring {
 public:
  // GF(q) with the default modulus polynomial (Conway polynomial for the
  // prime powers up to 256, smallest irreducible in lexicographic coefficient
  // order beyond that).
  static Ring gf(int order);

  // GF(p^m) with a caller-supplied monic modulus, coefficients ascending by
  // degree (length m+1). The polynomial must be irreducible over GF(p).
  static Ring gf(int p, int m, const std::vector<int>& modulus);

  static Ring zmod(int n);

  int order() const { return order_; }
  bool is_field() const { return field_; }
  const std::string& name() const { return name_; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int neg(int a) const { return neg_[check(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  bool is_unit(int a) const { return inv_[check(a)] >= 0; }
  // Units only; throws DomainError for zero divisors and zero.
  int inv(int a) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.name_ == b.name_ && a.mul_ == b.mul_;
  }

 private:
  Ring() = default;
  int idx(int a, int b) const { return check(a) * order_ + check(b); }
  int check(int a) const;
  void fill_inverses();

  int order_ = 0;
  bool field_ = false;
  std::string name_;
  std::vector<int> add_, mul_, neg_, inv_;
};

// A system of linear equations over a ring: one coefficient row and one
// right-hand side entry per equation, at least one equation.
struct LinearSystem {
  Ring ring;
  std::vector<std::vector<int>> coefficients;
  std::vector<int> rhs;

  int unknowns() const {
    return coefficients.empty() ? 0
                                : static_cast<int>(coefficients.front().size());
  }
  // Shape and range checks; throws InvalidDesignError.
  void validate() const;
};

// All cells of the s^k full factorial (s = ring order, k = unknowns)
// satisfying every equation, by full enumeration. An empty solution set is an
// inconsistent system and raises InvalidDesignError.
Fraction solution_set(const LinearSystem& sys);

// Row reduction over a field. gf_row_basis returns the reduced echelon basis
// of the row space; gf_nullspace a basis of the right kernel.
std::vector<std::vector<int>> gf_row_basis(const Ring& field,
                                           std::vector<std::vector<int>> rows);
int gf_rank(const Ring& field, std::vector<std::vector<int>> rows);
std::vector<std::vector<int>> gf_nullspace(
    const Ring& field, const std::vector<std::vector<int>>& rows, int unknowns);

// Recovers, when one exists, a defining system over GF(s) whose solution set
// is exactly the given fraction: the fraction must be symmetric with prime
// power levels and form a coset of a GF(s)-subspace under the default field
// representation. A full factorial yields the single all-zero equation.
// Returns nullopt for designs that are not regular.
std::optional<LinearSystem> detect_regular(const Fraction& f);

}  // namespace oafrac
