#pragma once

#include <gmpxx.h>

#include <string>

namespace oafrac {

// Exact rational scalar used throughout. No floating point enters any
// algebraic computation; doubles appear only on the character-sum path of the
// generalized wordlength pattern and are reconstructed back to rationals
// there.
using Rational = mpq_class;

// num/den reduced to lowest terms with a positive denominator.
Rational make_rational(long long num, long long den = 1);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Nearest rational of the form p/max_den. The character path produces values
// that are exact multiples of 1/max_den, so the nearest multiple is the exact
// answer whenever the rounding residual stays within tol. Throws NumericError
// when it does not.
Rational reconstruct_rational(double x, long long max_den, double tol);

}  // namespace oafrac
