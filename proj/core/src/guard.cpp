#include "oafrac/guard.hpp"

#include <string>

#include "oafrac/errors.hpp"
#include "oafrac/factorial.hpp"

namespace oafrac {

void ResourceGuard::check(const FullFactorial& f) const {
  if (f.factor_count() > max_factors)
    throw ResourceLimitError("design has " + std::to_string(f.factor_count()) +
                             " factors, limit is " +
                             std::to_string(max_factors) +
                             " (raise with --max-factors)");
  if (f.cell_count() > max_cells)
    throw ResourceLimitError("full factorial has " +
                             std::to_string(f.cell_count()) +
                             " cells, limit is " + std::to_string(max_cells) +
                             " (raise with --max-cells)");
}

}  // namespace oafrac
