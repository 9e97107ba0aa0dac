#pragma once

// Character and Hilbert-series formulas for the diagonal coinvariant ring and
// the polygraph coordinate rings: the torus-localization sum over partition
// diagrams, the Frobenius series of R(n,l) and R_n, the q,t-Catalan
// polynomial, the specializations at t = 1/q and t = 1, and the Schur-functor
// refinements carrying the S_l action.
//
// Everything here that has two published formulas is computed along both and
// cross-checked. By default a disagreement throws RouteMismatch; callers that
// want to inspect a broken engine (the CLI's exploratory mode) pass a note
// pointer instead, receive the first route's value, and get the mismatch
// appended to the note.

#include "macdonald/macdonald.hpp"

#include <functional>
#include <string>

namespace qth {

// Sum over all mu of weight n of numerator(mu) / loc_denominator(mu),
// accumulated over a common factored denominator and reduced once at the end.
SymFunc localization_sum(int n,
                         const std::function<SymFunc(const Partition &)> &numerator);

// Frobenius series of the polygraph ring R(n,l): localization sum with
// numerator B_mu^l H~_mu against Delta_{e_1}^l h_n[Z/((1-q)(1-t))].
SymFunc frob_R(int n, int l, std::string *mismatch = nullptr);

// Frobenius series of the diagonal coinvariant ring R_n: localization sum
// with numerator (1-q)(1-t) Pi_mu B_mu H~_mu against nabla e_n. Coefficients
// are checked to lie in N[q,t].
SymFunc frob_Rn(int n, std::string *mismatch = nullptr);

enum class CatalanMethod {
    Inner,         // <e_n, nabla e_n>
    Sum,           // closed localization sum over mu
    Combinatorial, // area/dinv generating function over Dyck sequences
};

// The q,t-Catalan polynomial C_n(q,t), the Hilbert series of the alternating
// part of R_n, by one method or by all three with agreement enforced.
QtLaurent qt_catalan(int n, CatalanMethod method);
QtLaurent qt_catalan(int n, std::string *mismatch = nullptr);

// Hilbert series <s_1^n, F> of a degree-n Frobenius series.
QtFraction hilbert_of(const SymFunc &f);

// Hilbert series of R(n,l): <s_1^n, Delta^l h_n[Z/((1-q)(1-t))]> against
// (1-q)^{-n}(1-t)^{-n} <e_n, Delta^l s_1^n>.
QtFraction hilbert_R(int n, int l, std::string *mismatch = nullptr);

// Outcome of a specialization identity check; failures throw IdentityFails,
// so a returned report means both sides matched. The fields carry the
// specialized Hilbert series and its value at q = 1 (the dimension
// (n+1)^{n-1}) for display.
struct SpecCheckReport {
    QtLaurent hilbert;
    BigInt dimension;
};

// t = 1/q: verifies q^binom(n,2) F_{R_n}(z;q,1/q) equals
// (1/[n+1]_q) sum_lambda s_lambda(1,q,...,q^n) s_lambda, and the Hilbert
// counterpart q^binom(n,2) H(q,1/q) = (1+q+...+q^n)^{n-1}. The substitution
// happens only after the series is fully reduced to polynomial coefficients.
SpecCheckReport check_tq_inverse(int n);

// t = 1: verifies F_{R_n}(z;q,1) equals the weight-graded character of the
// sign-twisted parking function module, built from per-cycle-type fixed
// counts through the characteristic map.
SpecCheckReport check_t1_parking(int n);

// Frobenius series of the nu-isotypic spaces for the S_l action on the l
// copies of B. frob_S covers S(n,l,nu) = (R(n,l)/m R(n,l))_nu: localization
// sum with numerator (1-q)(1-t) Pi_mu B_mu s_nu[B_mu] H~_mu against
// Delta_{s_nu} nabla e_n. frob_R_nu covers R(n,l)_nu: numerator
// s_nu[B_mu] H~_mu against Delta_{s_nu} h_n[Z/((1-q)(1-t))]. Requires
// |nu| = l.
SymFunc frob_S(int n, int l, const Partition &nu,
               std::string *mismatch = nullptr);
SymFunc frob_R_nu(int n, int l, const Partition &nu,
                  std::string *mismatch = nullptr);

// Delta_{s_nu} e_n. Polynomiality of the coefficients is asserted
// (PolynomialityFails on violation); Schur positivity is only reported,
// since in general it is an open conjecture.
struct DeltaReport {
    SymFunc value;
    bool schur_positive = false;
};
DeltaReport delta_snu_en(int n, const Partition &nu);

} // namespace qth
