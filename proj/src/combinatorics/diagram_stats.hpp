#pragma once

// Fixed-point localization data attached to a Ferrers diagram. The bidegree
// convention is cell (row, col) -> t^row * q^col, so x-degrees pair with t and
// y-degrees with q everywhere downstream.

#include "combinatorics/partition.hpp"
#include "exactnum/qt_laurent.hpp"

namespace qth {

// Sum of t^row q^col over the diagram cells.
QtLaurent b_mu(const Partition &mu);

// Product of (1 - t^row q^col) over the cells other than the origin.
QtLaurent pi_mu(const Partition &mu);

// The torus-fixed-point denominator: product over cells of
// (1 - t^{1+leg} q^{-arm}) * (1 - t^{-leg} q^{1+arm}). A nonzero Laurent
// polynomial, generally with negative exponents.
QtLaurent loc_denominator(const Partition &mu);

// The monomial t^{n(mu)} q^{n(mu')}.
QtLaurent t_mu(const Partition &mu);

} // namespace qth
