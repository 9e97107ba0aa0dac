#pragma once

// Exact linear solving over Q(q,t): rows are cleared to polynomials, then
// eliminated fraction-free (Bareiss), so no intermediate rational-function
// blow-up occurs. Solutions are verified by back-substitution before return.

#include "exactnum/qt_fraction.hpp"

#include <vector>

namespace qth {

using FractionMatrix = std::vector<std::vector<QtFraction>>;
using FractionVector = std::vector<QtFraction>;

// Solves A x = b for square nonsingular A. Throws SingularMatrix otherwise.
FractionVector solve_linear(const FractionMatrix &a, const FractionVector &b);

// Solves a possibly overdetermined system with a unique solution (full column
// rank, every extra row consistent). Throws SingularMatrix on rank deficiency
// or inconsistency.
FractionVector solve_unique(FractionMatrix a, FractionVector b);

} // namespace qth
