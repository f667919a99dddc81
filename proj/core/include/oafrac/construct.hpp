#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "oafrac/factorial.hpp"
#include "oafrac/ring.hpp"

namespace oafrac {

// Solution set over GF(s); the system's ring must be a field of order s with
// k unknowns.
Fraction regular_fraction(int s, int k, const LinearSystem& sys);

// Solution set over Z/n; n may be composite, in which case the result is
// generally not regular.
Fraction modular_fraction(int n, int k, const LinearSystem& sys);

// Disjoint union of two fractions of the same parent. A shared run would make
// the union non-simple and raises InvalidDesignError.
Fraction juxtapose(const Fraction& a, const Fraction& b);

// Projection onto a factor subset, with multiplicities: the projected image
// is a multiset even though the fraction is simple.
struct Projection {
  std::vector<int> factors;
  std::map<std::vector<int>, long long> counts;
  long long total() const;
};
Projection project(const Fraction& f, const std::vector<int>& factors);

// Text format: optional '#' comment lines, then a header "k s_1 ... s_k",
// then one run per line as k space-separated levels. Input rows need not be
// sorted; output is always sorted. Duplicate rows are rejected as non-simple.
Fraction read_design(std::istream& in);
Fraction read_design_file(const std::string& path);
void write_design(const Fraction& f, std::ostream& out);
void write_design_file(const Fraction& f, const std::string& path);

}  // namespace oafrac
