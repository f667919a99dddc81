#include "oafrac/rational.hpp"

#include <cmath>

#include "oafrac/errors.hpp"

namespace oafrac {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational reconstruct_rational(double x, long long max_den, double tol) {
  if (max_den <= 0) throw DomainError("reconstruction needs a positive denominator bound");
  if (!std::isfinite(x)) throw NumericError("non-finite value in reconstruction");
  const double scaled = x * static_cast<double>(max_den);
  // Beyond 2^53 the nearest multiple of 1/max_den is no longer identifiable.
  if (std::fabs(scaled) > 9.0e15)
    throw NumericError("value too large for exact reconstruction");
  const long long p = std::llround(scaled);
  Rational r = make_rational(p, max_den);
  const double residual = std::fabs(x - r.get_d());
  if (residual > tol)
    throw NumericError("reconstruction residual " + std::to_string(residual) +
                       " exceeds tolerance");
  return r;
}

}  // namespace oafrac
