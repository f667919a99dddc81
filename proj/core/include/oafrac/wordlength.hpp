#pragma once

#include <vector>

#include "oafrac/factorial.hpp"
#include "oafrac/rational.hpp"

namespace oafrac {

// Generalized wordlength pattern A_0..A_k, exact. A_0 is always 1; reports
// show (A_1..A_k).
struct GwlpVector {
  std::vector<Rational> a;

  int k() const { return static_cast<int>(a.size()) - 1; }

  friend bool operator==(const GwlpVector&, const GwlpVector&) = default;
};

// Character-sum path, valid for mixed-level designs. Character sums are
// accumulated in complex doubles; each weight class total is reconstructed to
// an exact rational with denominator N^2. Any imaginary residue, negative
// excursion, or rounding residual beyond tol raises NumericError instead of
// rounding silently. max_residual, when non-null, receives the largest
// rounding residual encountered.
GwlpVector gwlp_characters(const Fraction& f, double tol = 1e-9,
                           double* max_residual = nullptr);

// B_0..B_k with B_d = #(ordered run pairs at Hamming distance d) / N.
// Symmetric designs only; B_0 = 1 for simple fractions.
struct DistanceDistribution {
  std::vector<Rational> b;

  friend bool operator==(const DistanceDistribution&,
                         const DistanceDistribution&) = default;
};
DistanceDistribution distance_distribution(const Fraction& f);

// Krawtchouk polynomial value P_i(d) for k factors at s levels, exact:
// sum_r (-1)^r (s-1)^(i-r) C(d,r) C(k-d,i-r).
Rational krawtchouk(int i, int d, int k, int s);

// MacWilliams-transform path, exact, symmetric designs only:
// A_i = (1/N) sum_d P_i(d) B_d.
GwlpVector gwlp_krawtchouk(const Fraction& f);

// Classical wordlength pattern of a regular fraction: A_i counts the nonzero
// vectors of Hamming weight i in the dual (annihilator) space of the defining
// system. Raises DomainError for non-regular input.
GwlpVector regular_wlp(const Fraction& f);

// Smallest i >= 1 with A_i > 0, or k + 1 when every entry past A_0 is zero.
int min_positive_index(const GwlpVector& g);

}  // namespace oafrac
