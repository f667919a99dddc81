#pragma once

#include <optional>
#include <vector>

#include "oafrac/effects.hpp"
#include "oafrac/guard.hpp"
#include "oafrac/rational.hpp"
#include "oafrac/strength.hpp"
#include "oafrac/wordlength.hpp"

namespace oafrac {

// Explicit certificate that two interaction spaces with |I| + |J| = t_max + 1
// are not unaliased, built from the strength failure witness. With
// B' in C_I and B'' in C_J the blocks through the failing block B of C_K,
// the restrictions of u = 1_B' - pi(B')1 and v = 1_B'' - pi(B'')1 satisfy
// (u^, v^) = |T| (pi(B ∩ S) - pi(B) pi(S)) != 0. When t_max = 0 the failing K
// is a singleton, J is empty and v is the all-ones vector.
struct AliasWitness {
  std::vector<int> K;
  std::vector<int> I;             // first element of K
  std::vector<int> J;             // remainder of K
  std::vector<int> block_levels;  // levels fixing B inside C_K
  Rational value;                 // the common value of both evaluations

  friend bool operator==(const AliasWitness&, const AliasWitness&) = default;
};

// The inner product is evaluated both directly and by the closed form; any
// disagreement or a zero value is an internal invariant failure. When deep is
// set, u and v are additionally projected onto the interaction spaces U_I and
// U_J and the inner product of the projected restrictions is required to
// match as well. Requires t_max < k.
AliasWitness alias_witness(const Fraction& f, bool deep = false);

struct VerificationReport {
  int t_max = 0;
  int r_max = 0;
  int min_gwlp_index = 0;
  bool identity_holds = false;
  GwlpVector gwlp;
  StrengthReport strength;
  std::optional<AliasWitness> witness;  // present iff t_max < k
};

// Computes maximum strength, maximum resolution and the first positive
// wordlength index through their own modules and checks
// r_max = t_max + 1 = min{i : A_i > 0}.
VerificationReport verify_identities(const Fraction& f,
                                     ResourceGuard guard = {});

}  // namespace oafrac
