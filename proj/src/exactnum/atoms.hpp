#pragma once

// Factored bookkeeping for the structured denominators that dominate the
// Macdonald and localization computations. Every denominator in sight is a
// product of cyclotomic polynomials evaluated at a monomial q^a t^b (factors
// of 1 - q^A t^B) or of homogeneous cyclotomics in (q^a, t^b) (factors of
// q^A - t^B). Keeping denominators as exponent vectors over a registry of
// pairwise coprime atoms turns common-denominator arithmetic into integer
// max/plus and defers all cancellation to one round of exact trial division,
// which is far cheaper than the gcd a canonical fraction pays per addition.

#include "exactnum/qt_fraction.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <tuple>
#include <vector>

namespace qth {

// Coefficients of the d-th cyclotomic polynomial, ascending, constant first.
// Cached; computed by peeling divisors off x^d - 1.
const std::vector<long> &cyclotomic_coeffs(int d);

// Phi_d evaluated at the monomial q^a t^b. Requires d >= 1, a, b >= 0, not
// both zero, gcd(a, b) = 1.
QtLaurent cyclotomic_at_monomial(int d, int a, int b);

// Homogenized Phi_d evaluated at (q^a, t^b): sum c_i q^{a i} t^{b (m - i)}
// with m = deg Phi_d. Requires a, b >= 1, gcd(a, b) = 1.
QtLaurent cyclotomic_homog(int d, int a, int b);

// Append-only global store of atoms. Cyclotomic atoms are irreducible, so
// distinct ids are coprime; anything the splitter fails to recognize is
// registered opaque and handled conservatively downstream.
class AtomRegistry {
public:
    using Factors = std::map<int, int>; // atom id -> positive exponent

    struct Split {
        BigRational coeff;
        int sq = 0;
        int st = 0;
        Factors factors;
    };

    static AtomRegistry &instance();

    const QtLaurent &atom(int id) const;
    bool is_opaque(int id) const;

    int cyclotomic_id(int d, int a, int b);
    int homog_id(int d, int a, int b);

    // Pre-register the factors of every 1 - q^A t^B (respectively q^A - t^B)
    // with 0 <= A, B <= bound, so factor() can peel products of them.
    void seed_binomials(int bound);
    void seed_differences(int bound);

    // Factor a nonzero Laurent polynomial as
    //   coeff * q^sq * t^st * prod atom_i^{e_i}.
    // Registered atoms are peeled by exact division; a two-term remainder is
    // split into fresh cyclotomic atoms; any other remainder registers as a
    // new opaque atom, which keeps the result exact if not fully split.
    Split factor(const QtLaurent &p);

    // Product of atom powers as a polynomial.
    QtLaurent expand(const Factors &f) const;

private:
    AtomRegistry() = default;
    int intern(const QtLaurent &p, bool opaque);

    mutable std::mutex mutex_;
    std::deque<QtLaurent> atoms_;
    std::map<std::tuple<int, int, int>, int> cyc_ids_;
    std::map<std::tuple<int, int, int>, int> homog_ids_;
    std::set<int> opaque_;
};

// Exponent-wise sum of two factor maps (product of the denominators).
inline AtomRegistry::Factors merge_factors(const AtomRegistry::Factors &a,
                                           const AtomRegistry::Factors &b) {
    AtomRegistry::Factors out = a;
    for (const auto &[id, e] : b) out[id] += e;
    return out;
}

// Accumulates sum c_k * q^{sq_k} t^{st_k} * num_k / prod atoms^{den_k} over a
// running common denominator without any gcd work; finish() divides out what
// still cancels and assembles the canonical fraction.
class FactoredSum {
public:
    void add(const QtLaurent &num, const BigRational &c, int sq, int st,
             const AtomRegistry::Factors &den);
    bool empty() const { return num_.is_zero(); }
    QtFraction finish() const;

private:
    QtLaurent num_;
    AtomRegistry::Factors den_;
};

} // namespace qth
