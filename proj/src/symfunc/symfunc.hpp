#pragma once

// Homogeneous symmetric functions over the field of rational functions in q
// and t, held in Schur coordinates. Alphabets for plethystic substitution are
// either the formal variable set Z scaled by a rational function (acting on
// power sums by p_k -> r(q^k,t^k) p_k) or a finite multiset of q,t-monomials
// given as a Laurent polynomial with nonnegative integer coefficients.

#include "combinatorics/partition.hpp"
#include "exactnum/qt_fraction.hpp"
#include "symfunc/basis_tables.hpp"

#include <map>
#include <string>

namespace qth {

// Optional coefficient automorphism applied before a plethystic substitution.
enum class CoeffTwist { None, InvertT };

class SymFunc {
public:
    using Coeffs = std::map<Partition, QtFraction>;

    SymFunc() = default; // zero of degree 0

    static SymFunc zero(int degree);
    static SymFunc one() { return schur(Partition()); }
    static SymFunc schur(const Partition &lambda);
    static SymFunc power(const Partition &rho);   // p_rho
    static SymFunc power_sum(int k);              // p_k
    static SymFunc elementary(int k);             // e_k
    static SymFunc homogeneous(int k);            // h_k
    static SymFunc monomial_sym(const Partition &lambda);

    static SymFunc from_basis(int degree, const Coeffs &coeffs, SymBasis b);

    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const Coeffs &coeffs() const { return coeffs_; } // Schur coordinates
    QtFraction schur_coeff(const Partition &lambda) const;

    Coeffs to_basis(SymBasis b) const;

    SymFunc operator-() const;
    SymFunc &operator+=(const SymFunc &o);
    SymFunc &operator-=(const SymFunc &o);
    friend SymFunc operator+(SymFunc a, const SymFunc &b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc &b) { return a -= b; }
    friend SymFunc operator*(const SymFunc &a, const SymFunc &b);
    SymFunc &operator*=(const SymFunc &o) { return *this = *this * o; }
    SymFunc scaled(const QtFraction &c) const;

    friend bool operator==(const SymFunc &, const SymFunc &) = default;

    // omega: s_lambda -> s_{lambda'}.
    SymFunc dual() const;

    // p_k -> r(q^k, t^k) p_k, with the coefficient twist applied first.
    SymFunc plethys_sub(const QtFraction &r,
                        CoeffTwist twist = CoeffTwist::None) const;

    // Evaluation at a finite alphabet: a Laurent polynomial with nonnegative
    // integer coefficients read as a multiset of monomials.
    QtLaurent eval_alphabet(const QtLaurent &alphabet) const;

    // Evaluation at {1, q, ..., q^m}.
    QtLaurent principal_spec(int m) const;

    std::string to_string() const;

private:
    int degree_ = 0;
    Coeffs coeffs_;

    void add_schur_term(const Partition &lambda, const QtFraction &c);
};

// Hall pairing: Schur basis orthonormal. Zero when degrees differ.
QtFraction hall_inner(const SymFunc &f, const SymFunc &g);

// The modified pairing <f,g>_* = hall_inner(omega(f[Z(1-q)(1-t)]), g).
QtFraction star_inner(const SymFunc &f, const SymFunc &g);

} // namespace qth
