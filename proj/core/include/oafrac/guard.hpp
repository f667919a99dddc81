#pragma once

namespace oafrac {

class FullFactorial;

// Size bounds checked before subset-lattice enumerations and cell-by-cell
// effect space constructions. Callers can raise them knowingly.
struct ResourceGuard {
  int max_factors = 10;
  long long max_cells = 4096;

  // Throws ResourceLimitError when the factorial exceeds either bound.
  void check(const FullFactorial& f) const;
};

}  // namespace oafrac
