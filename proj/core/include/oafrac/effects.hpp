#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "oafrac/factorial.hpp"
#include "oafrac/guard.hpp"
#include "oafrac/linalg.hpp"
#include "oafrac/partition.hpp"
#include "oafrac/ring.hpp"

namespace oafrac {

// Contrast functions constant on the blocks of a partition: dimension
// block_count - 1. Basis built from indicator-minus-mean vectors
// 1_B - pi(B) 1, one block dropped, then canonicalized.
Subspace contrast_space(const Partition& p);

// Memoized interaction spaces of one full factorial. The empty subset maps to
// the span of the all-ones vector. For nonempty I the space is built
// inductively: the orthogonal complement, inside the contrast space of the
// blocking C_I, of the span of all spaces for proper nonempty subsets of I.
// Its dimension is prod_{i in I} (s_i - 1).
class EffectLattice {
 public:
  explicit EffectLattice(FullFactorial f);

  const FullFactorial& factorial() const { return fact_; }
  const Subspace& space_for(const std::vector<int>& factors);

 private:
  FullFactorial fact_;
  std::map<std::vector<int>, Subspace> cache_;
};

// One-off construction of a single interaction space.
Subspace interaction_space(const FullFactorial& f,
                           const std::vector<int>& factors);

// Restriction of a subspace of R^T to the coordinates indexed by the
// fraction's runs, re-reduced (the dimension can drop).
Subspace restrict_space(const Subspace& space, const Fraction& f);

enum class Aliasing { Complete, Unaliased, Partial };

// Relation of two restricted effect spaces: Equal -> Complete,
// Orthogonal -> Unaliased, otherwise Partial.
Aliasing classify_alias(const Subspace& restricted_a,
                        const Subspace& restricted_b);

struct AliasPair {
  std::vector<int> first;
  std::vector<int> second;
  Aliasing aliasing;
};

struct AliasReport {
  int max_order = 0;
  std::vector<AliasPair> pairs;  // canonical (size, lex) order
  int r_max = 0;
};

// Shared machinery for one fraction: a lattice over the parent plus memoized
// restrictions.
class AliasAnalyzer {
 public:
  explicit AliasAnalyzer(Fraction f, ResourceGuard guard = {});

  const Fraction& fraction() const { return frac_; }
  EffectLattice& lattice() { return lattice_; }
  const Subspace& restricted(const std::vector<int>& factors);
  Aliasing classify(const std::vector<int>& a, const std::vector<int>& b);

  // Smallest |I| + |J| over distinct subset pairs (the empty subset included)
  // that are not Unaliased; k + 1 for the full factorial, where no such pair
  // exists.
  int resolution_max();

  // Classification of every distinct pair with |I|, |J| <= max_order. r_max
  // is always the exact resolution regardless of max_order.
  AliasReport alias_table(int max_order);

 private:
  Fraction frac_;
  EffectLattice lattice_;
  std::map<std::vector<int>, Subspace> restricted_;
};

int resolution_max(const Fraction& f, ResourceGuard guard = {});
AliasReport alias_table(const Fraction& f, int max_order,
                        ResourceGuard guard = {});

// A pencil: a nonzero GF(s) coefficient vector modulo nonzero scalars, kept
// as the representative whose first nonzero coefficient is 1. Labels follow
// the AB^2C^2 convention: factor letters with coefficient exponents.
struct Pencil {
  std::vector<int> coefficients;

  int weight() const;
  std::string label() const;

  friend bool operator==(const Pencil&, const Pencil&) = default;
};

// All (s^k - 1)/(s - 1) pencils, by ascending coefficient-vector rank.
std::vector<Pencil> enumerate_pencils(const Ring& field, int k);

// The s-block partition {cells : c.x = v} of a pencil.
Partition pencil_blocking(const FullFactorial& f, const Ring& field,
                          const Pencil& p);

// Contrast space of every pencil's blocking, dimension s - 1 each. Requires a
// regular fraction (symmetric prime power levels, detected coset).
std::vector<std::pair<Pencil, Subspace>> pencil_spaces(const Fraction& f);

struct PencilClasses {
  // Groups of pencils whose restricted spaces are Equal, each sorted by
  // (weight, coefficient rank), groups ordered by their first member.
  std::vector<std::vector<Pencil>> classes;
  // Pencils whose restriction lies inside the span of the all-ones vector:
  // the defining words.
  std::vector<Pencil> defining;
};

// Alias classes of a regular fraction. Any Partial relation between pencil
// spaces of a regular fraction is an internal error.
PencilClasses pencil_alias_classes(const Fraction& f);

}  // namespace oafrac
