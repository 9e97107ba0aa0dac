#pragma once

// Per-degree transition data for the classical bases of symmetric functions.
// Everything here is rational (no q,t): the character table of S_d computed by
// the Murnaghan-Nakayama rule, and for each basis b the matrix expressing b_mu
// in Schur coordinates together with its inverse. Tables are built once per
// degree and cached; reads after that are lock-free copies of const data.

#include "combinatorics/partition.hpp"
#include "exactnum/rational.hpp"

#include <map>
#include <vector>

namespace qth {

enum class SymBasis { Monomial, Elementary, Homogeneous, Power, Schur };

using QMatrix = std::vector<std::vector<BigRational>>;

struct DegreeTable {
    int degree = 0;
    std::vector<Partition> mus; // partitions_of(degree), reverse-lex
    std::map<Partition, int> index;
    std::vector<BigInt> z; // centralizer orders, aligned with mus

    // chi[l][r]: character of the irreducible indexed by mus[l] at the
    // conjugacy class of cycle type mus[r].
    std::vector<std::vector<BigInt>> chi;

    // to_schur[b][l][m]: coefficient of s_{mus[l]} in b_{mus[m]}; from_schur
    // is the inverse matrix. Indexed by SymBasis (Schur maps to identity).
    std::map<SymBasis, QMatrix> to_schur;
    std::map<SymBasis, QMatrix> from_schur;

    int index_of(const Partition &mu) const;
};

// Cached lookup; builds the table on first use. Degrees above the cap throw
// ResourceBound.
const DegreeTable &degree_table(int degree);

int symfunc_degree_cap();
void set_symfunc_degree_cap(int cap);

// Single character value, memoized across calls.
BigInt mn_character(const Partition &shape, const Partition &cycle_type);

} // namespace qth
