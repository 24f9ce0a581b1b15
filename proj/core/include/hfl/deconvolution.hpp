#pragma once

#include <vector>

#include "hfl/grid.hpp"
#include "hfl/table.hpp"

namespace hfl {

/// Exponents of the two-dimensional tensor factors separating the tilde
/// complex from the hat invariant: component i carries
/// V_i = F(maslov 0, A 0) + F(maslov -1, A_i -1) to the power n_i - 1.
struct FactorSpec {
  std::vector<int> exponents;

  static FactorSpec for_grid(const GridDiagram& g);
};

/// Exact division of poincare(t) by prod_i (1 + q^-1 t_i^-1)^e_i, processed
/// top-down over the (sum, alexander2, maslov) descending order. Throws
/// NonDivisibleError if any coefficient would go negative; that always
/// means the input table is not a genuine tilde table.
GradedDimTable strip_factors(const GradedDimTable& t, const FactorSpec& f);

/// Inverse of strip_factors: multiplies a table by the factor polynomial.
GradedDimTable apply_factors(const GradedDimTable& t, const FactorSpec& f);

}  // namespace hfl
