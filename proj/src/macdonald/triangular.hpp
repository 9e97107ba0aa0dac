#pragma once

// Independent characterization of H~_mu, used to cross-check the plethystic
// construction: the unique symmetric function F of degree n with
//   F[Z(1-q)] supported on {s_lambda : lambda >= mu in dominance},
//   F[Z(1-t)] supported on {s_lambda : lambda >= mu'},
//   s_(n)-coefficient 1.
// Solved as an exact linear system in the Schur coefficients of F.

#include "symfunc/symfunc.hpp"

namespace qth {

SymFunc h_tilde_by_triangularity(const Partition &mu);

} // namespace qth
