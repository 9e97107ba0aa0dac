#include "exactnum/qt_laurent.hpp"

#include <map>
#include <utility>
#include <vector>

// Bivariate gcd by the classical primitive polynomial-remainder-sequence
// route: view both operands as univariate in q with coefficients in Z[t],
// split off t-contents (univariate gcds), run a pseudo-remainder sequence on
// the primitive parts, and reattach the content gcd. No modular arithmetic;
// everything is exact and deterministic.

namespace qth {

namespace {

int t_deg(const QtLaurent &p) { return p.max_t_exp(); }

BigRational t_lead_coeff(const QtLaurent &p) {
    return p.coeff(0, t_deg(p));
}

// Integer-primitive normalization of a univariate (t-only) polynomial:
// unit content, positive leading coefficient.
QtLaurent t_prim(const QtLaurent &p) { return p.primitive_part(); }

// Pseudo-remainder of univariate t-polynomials (a, b integer-primitive or at
// least integer; result has integer coefficients).
QtLaurent t_prem(QtLaurent r, const QtLaurent &b) {
    int db = t_deg(b);
    BigRational lcb = t_lead_coeff(b);
    while (!r.is_zero() && t_deg(r) >= db) {
        int dr = t_deg(r);
        BigRational lcr = t_lead_coeff(r);
        QtLaurent scaled_r = r.scaled(lcb, 0, 0);
        QtLaurent sub = b.scaled(lcr, 0, dr - db);
        r = scaled_r - sub;
    }
    return r;
}

// Gcd of univariate t-polynomials via the primitive PRS.
QtLaurent t_gcd(QtLaurent a, QtLaurent b) {
    if (a.is_zero()) return t_prim(b);
    if (b.is_zero()) return t_prim(a);
    a = t_prim(a);
    b = t_prim(b);
    if (t_deg(a) < t_deg(b)) std::swap(a, b);
    while (!b.is_zero()) {
        QtLaurent r = t_prem(a, b);
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : t_prim(r);
    }
    return t_prim(a);
}

// Split a polynomial (nonnegative exponents) into q-degree -> t-coefficient.
std::map<int, QtLaurent> q_coefficients(const QtLaurent &p) {
    std::map<int, QtLaurent> out;
    for (const auto &[e, c] : p.terms()) out[e.qe].add_term(0, e.te, c);
    return out;
}

int q_deg(const QtLaurent &p) { return p.max_q_exp(); }

// t-content of a bivariate polynomial: gcd of its q-coefficients.
QtLaurent t_content(const QtLaurent &p) {
    QtLaurent g;
    for (const auto &[qe, tc] : q_coefficients(p)) {
        g = t_gcd(g, tc);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// Leading q-coefficient (a t-polynomial).
QtLaurent q_lead_coeff(const QtLaurent &p) {
    QtLaurent out;
    int d = q_deg(p);
    for (const auto &[e, c] : p.terms())
        if (e.qe == d) out.add_term(0, e.te, c);
    return out;
}

// Pseudo-remainder in q with coefficients in Z[t].
QtLaurent q_prem(QtLaurent r, const QtLaurent &b) {
    int db = q_deg(b);
    QtLaurent lcb = q_lead_coeff(b);
    while (!r.is_zero() && q_deg(r) >= db) {
        int dr = q_deg(r);
        QtLaurent lcr = q_lead_coeff(r);
        QtLaurent mult = b * lcr;
        mult.shift(dr - db, 0);
        r = r * lcb - mult;
    }
    return r;
}

} // namespace

QtLaurent qt_gcd(const QtLaurent &a_in, const QtLaurent &b_in) {
    if (a_in.is_zero() && b_in.is_zero()) return QtLaurent();
    if (a_in.is_zero()) return b_in.primitive_part();
    if (b_in.is_zero()) return a_in.primitive_part();

    // Common monomial factor (only for nonnegative-exponent inputs; for
    // genuine Laurent inputs the monomial part is a unit and dropped).
    int gq = std::min(a_in.min_q_exp(), b_in.min_q_exp());
    int gt = std::min(a_in.min_t_exp(), b_in.min_t_exp());
    if (gq < 0) gq = 0;
    if (gt < 0) gt = 0;

    QtLaurent a = a_in.primitive_part();
    a.shift(-a.min_q_exp(), -a.min_t_exp());
    QtLaurent b = b_in.primitive_part();
    b.shift(-b.min_q_exp(), -b.min_t_exp());

    QtLaurent cont_a = t_content(a);
    QtLaurent cont_b = t_content(b);
    QtLaurent c = t_gcd(cont_a, cont_b);
    QtLaurent ap = div_exact(a, cont_a);
    QtLaurent bp = div_exact(b, cont_b);

    QtLaurent g0;
    if (q_deg(ap) == 0 || q_deg(bp) == 0) {
        // A t-primitive polynomial of q-degree 0 is a unit, so the primitive
        // gcd is 1 unless both are q-free (handled by t_gcd in content above).
        g0 = QtLaurent(1);
    } else {
        QtLaurent f = ap, g = bp;
        if (q_deg(f) < q_deg(g)) std::swap(f, g);
        for (;;) {
            QtLaurent r = q_prem(f, g);
            if (r.is_zero()) {
                g0 = div_exact(g, t_content(g));
                break;
            }
            f = std::move(g);
            g = div_exact(r, t_content(r));
        }
    }

    QtLaurent result = g0 * c;
    result = result.primitive_part();
    result.shift(gq, gt);
    return result;
}

} // namespace qth
