#pragma once

// Macdonald polynomials and the transformed basis used by every character
// formula downstream. Construction per degree: Gram-Schmidt for P_lambda
// against the (q,t)-deformed power-sum pairing, the integral form J_mu, then
// the plethystic twist to H~_mu. Tables validate themselves on construction:
// Schur coefficients must be polynomials with nonnegative integer
// coefficients, the s_(n) coefficient must be 1, and <e_n, H~_mu> must hit
// the diagram monomial t^{n(mu)} q^{n(mu')}.

#include "combinatorics/diagram_stats.hpp"
#include "symfunc/symfunc.hpp"

namespace qth {

// <p_a, p_b> = delta_ab z_a prod_i (1-q^{a_i})/(1-t^{a_i}).
QtFraction qt_inner(const SymFunc &f, const SymFunc &g);

struct MacdonaldTable {
    int n = 0;
    std::vector<Partition> mus; // partitions_of(n)
    std::map<Partition, SymFunc> p_poly; // P_lambda, monic in m_lambda
    std::map<Partition, SymFunc> htilde;
    std::string route = "twist"; // construction provenance ("twist"/"cache")
    bool validated = false;

    const SymFunc &h(const Partition &mu) const;
};

// Cached per degree; built on first use.
const MacdonaldTable &macdonald_table(int n);

// Installs entries loaded from elsewhere (the on-disk cache). Runs the same
// validation; failures throw CorruptCache instead of the construction errors.
const MacdonaldTable &macdonald_table_install(
    int n, const std::map<Partition, SymFunc> &entries);

SymFunc macdonald_P(const Partition &lambda);
SymFunc macdonald_J(const Partition &mu);
SymFunc h_tilde(const Partition &mu);

// Coefficients of f in the H~ basis, via star-inner quotients (the basis is
// star-orthogonal). Verified by resubstitution before returning.
std::map<Partition, QtFraction> expand_in_htilde(const SymFunc &f);

// Linear extension of nabla H~_mu = t^{n(mu)} q^{n(mu')} H~_mu.
SymFunc nabla(const SymFunc &f);

// Linear extension of Delta_f H~_mu = f[B_mu] H~_mu.
SymFunc delta_f(const SymFunc &f, const SymFunc &g);

} // namespace qth
