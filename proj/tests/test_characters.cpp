#include "characters/characters.hpp"

#include "combinatorics/catalan_paths.hpp"
#include "combinatorics/diagram_stats.hpp"
#include "doctest.h"

#include <map>

using namespace qth;

namespace {

QtLaurent mono(long c, int qe, int te) {
    return QtLaurent::monomial(BigRational(c), qe, te);
}

QtLaurent one_minus(int qe, int te) { return QtLaurent(1) - mono(1, qe, te); }

QtFraction frac(const QtLaurent &n, const QtLaurent &d) {
    return QtFraction::make(n, d);
}

QtLaurent m_poly() { return one_minus(1, 0) * one_minus(0, 1); }

// h_n[Z/((1-q)(1-t))], for comparisons against the localization engine.
SymFunc poly_ring_series(int n) {
    return SymFunc::homogeneous(n).plethys_sub(frac(QtLaurent(1), m_poly()));
}

BigInt catalan_number(int n) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    return c / (n + 1);
}

BigInt power_count(int base, int e) {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), base, e);
    return v;
}

} // namespace

TEST_CASE("localization sum examples") {
    // Numerator H~_mu collapses to the Frobenius series of the polynomial
    // ring, the basic rational-function identity behind everything else.
    for (int n = 1; n <= 6; ++n) {
        const MacdonaldTable &table = macdonald_table(n);
        SymFunc s = localization_sum(
            n, [&](const Partition &mu) { return table.h(mu); });
        CHECK(s == poly_ring_series(n));
    }

    // Single fixed point at n=1.
    SymFunc b_route = localization_sum(1, [](const Partition &mu) {
        return h_tilde(mu).scaled(QtFraction::from_laurent(b_mu(mu)));
    });
    CHECK(b_route ==
          SymFunc::schur(Partition({1})).scaled(frac(QtLaurent(1), m_poly())));

    // Two-term sum at n=2 collapsing to a polynomial.
    QtLaurent m = m_poly();
    SymFunc rn2 = localization_sum(2, [&](const Partition &mu) {
        return h_tilde(mu).scaled(
            QtFraction::from_laurent(m * pi_mu(mu) * b_mu(mu)));
    });
    CHECK(rn2 == SymFunc::schur(Partition({2})) +
                     SymFunc::schur(Partition({1, 1}))
                         .scaled(frac(mono(1, 1, 0) + mono(1, 0, 1),
                                      QtLaurent(1))));

    CHECK_THROWS_AS(
        localization_sum(2, [](const Partition &) {
            return SymFunc::elementary(3);
        }),
        Error);
}

TEST_CASE("localization sum star-expansion of the polynomial ring") {
    // omega(result[Z(1-q)(1-t)]) recovers e_n.
    for (int n = 1; n <= 6; ++n) {
        const MacdonaldTable &table = macdonald_table(n);
        SymFunc s = localization_sum(
            n, [&](const Partition &mu) { return table.h(mu); });
        SymFunc back =
            s.plethys_sub(QtFraction::from_laurent(m_poly())).dual();
        CHECK(back == SymFunc::elementary(n));
    }
}

TEST_CASE("Frobenius series of the polygraph rings") {
    // l = 0 is the polynomial ring itself.
    for (int n = 1; n <= 4; ++n) CHECK(frob_R(n, 0) == poly_ring_series(n));

    // n = 1: a single fixed point with B = 1, for every l.
    SymFunc r1 =
        SymFunc::schur(Partition({1})).scaled(frac(QtLaurent(1), m_poly()));
    for (int l = 0; l <= 3; ++l) CHECK(frob_R(1, l) == r1);

    // Tensoring on one more copy of B is one more delta.
    for (int n = 2; n <= 4; ++n) {
        SymFunc iter = frob_R(n, 0);
        for (int l = 1; l <= 3; ++l) {
            iter = delta_f(SymFunc::elementary(1), iter);
            CHECK(frob_R(n, l) == iter);
        }
    }
}

TEST_CASE("Frobenius series of the diagonal coinvariants") {
    CHECK(frob_Rn(1) == SymFunc::schur(Partition({1})));
    CHECK(frob_Rn(2) ==
          SymFunc::schur(Partition({2})) +
              SymFunc::schur(Partition({1, 1}))
                  .scaled(frac(mono(1, 1, 0) + mono(1, 0, 1), QtLaurent(1))));

    // Dimension (n+1)^(n-1), and N[q,t] coefficients (checked inside, so a
    // normal return is itself a positivity statement).
    for (int n = 1; n <= 6; ++n) {
        SymFunc f = frob_Rn(n);
        QtFraction h = hilbert_of(f);
        CHECK(h.is_polynomial());
        CHECK(h.eval(BigRational(1), BigRational(1)) ==
              BigRational(power_count(n + 1, n - 1)));
    }
}

TEST_CASE("q,t-Catalan polynomials") {
    CHECK(qt_catalan(2) == mono(1, 1, 0) + mono(1, 0, 1));
    CHECK(qt_catalan(3) == mono(1, 3, 0) + mono(1, 2, 1) + mono(1, 1, 2) +
                               mono(1, 0, 3) + mono(1, 1, 1));

    // The three routes agree (enforced inside the generic entry point).
    for (int n = 1; n <= 6; ++n) CHECK_NOTHROW(qt_catalan(n));

    // q = t = 1 counts Dyck paths; the combinatorial route reaches further.
    for (int n = 1; n <= 10; ++n) {
        QtLaurent c = qt_catalan(n, CatalanMethod::Combinatorial);
        CHECK(QtFraction::from_laurent(c).eval(BigRational(1),
                                               BigRational(1)) ==
              BigRational(catalan_number(n)));
    }

    // q <-> t symmetry, inherited from conjugating the diagrams.
    for (int n = 1; n <= 8; ++n) {
        QtLaurent c = qt_catalan(n, CatalanMethod::Combinatorial);
        CHECK(c.swap_qt() == c);
    }
}

TEST_CASE("Hilbert series extraction") {
    CHECK(hilbert_of(frob_Rn(2)) ==
          QtFraction::from_laurent(QtLaurent(1) + mono(1, 1, 0) +
                                   mono(1, 0, 1)));
    for (int n = 1; n <= 5; ++n)
        CHECK(hilbert_of(SymFunc::schur(Partition::single_row(n))) ==
              QtFraction(1));
    for (int l = 0; l <= 2; ++l)
        CHECK(hilbert_of(frob_R(1, l)) == frac(QtLaurent(1), m_poly()));
}

TEST_CASE("Hilbert series of the polygraph rings") {
    for (int l = 0; l <= 2; ++l)
        CHECK(hilbert_R(1, l) == frac(QtLaurent(1), m_poly()));

    // l = 0: the 2n-variable polynomial ring, graded piece by graded piece.
    for (int n = 1; n <= 3; ++n) {
        auto coeffs = series_truncate(hilbert_R(n, 0), 4);
        for (int s = 0; s <= 4; ++s)
            for (int r = 0; r + s <= 4; ++r) {
                BigInt xs, ys;
                mpz_bin_uiui(xs.get_mpz_t(), r + n - 1, n - 1);
                mpz_bin_uiui(ys.get_mpz_t(), s + n - 1, n - 1);
                CHECK(coeffs.at({s, r}) == BigRational(xs * ys));
            }
    }

    // R(2,1) is functions on two copies of C^4 glued along a diagonal C^2,
    // so inclusion-exclusion gives (2 - (1-q)(1-t)) / ((1-q)^2 (1-t)^2).
    CHECK(hilbert_R(2, 1) ==
          frac(QtLaurent(2) - m_poly(), m_poly() * m_poly()));
}

TEST_CASE("specialization at t = 1/q") {
    auto n1 = check_tq_inverse(1);
    CHECK(n1.hilbert == QtLaurent(1));
    CHECK(n1.dimension == 1);

    auto n2 = check_tq_inverse(2);
    CHECK(n2.hilbert == QtLaurent(1) + mono(1, 1, 0) + mono(1, 2, 0));
    CHECK(n2.dimension == 3);

    for (int n = 3; n <= 5; ++n) {
        auto report = check_tq_inverse(n);
        CHECK(report.dimension == power_count(n + 1, n - 1));
    }
}

TEST_CASE("specialization at t = 1") {
    auto n1 = check_t1_parking(1);
    CHECK(n1.hilbert == QtLaurent(1));

    auto n2 = check_t1_parking(2);
    CHECK(n2.hilbert == QtLaurent(2) + mono(1, 1, 0));
    CHECK(n2.dimension == 3);

    for (int n = 3; n <= 5; ++n) {
        auto report = check_t1_parking(n);
        CHECK(report.dimension == power_count(n + 1, n - 1));
    }
}

TEST_CASE("Schur-functor refinements") {
    CHECK(frob_S(2, 1, Partition({1})) ==
          SymFunc::schur(Partition({2}))
                  .scaled(frac(QtLaurent(1) + mono(1, 1, 0) + mono(1, 0, 1),
                               QtLaurent(1))) +
              SymFunc::schur(Partition({1, 1}))
                  .scaled(frac(mono(1, 1, 0) + mono(1, 0, 1) + mono(1, 2, 0) +
                                   mono(1, 1, 1) + mono(1, 0, 2),
                               QtLaurent(1))));

    // Empty nu is the plain coinvariant series.
    for (int n = 1; n <= 4; ++n)
        CHECK(frob_S(n, 0, Partition()) == nabla(SymFunc::elementary(n)));
    CHECK(frob_S(1, 1, Partition({1})) == SymFunc::schur(Partition({1})));

    for (int n = 1; n <= 3; ++n)
        CHECK(frob_R_nu(n, 0, Partition()) == frob_R(n, 0));

    // B^l = sum over |nu| = l of f^nu s_nu[B] splits the polygraph series
    // into its isotypic parts: one copy of nu = (1) at l = 1, and
    // S^2 + wedge^2 at l = 2.
    for (int n = 1; n <= 3; ++n) {
        CHECK(frob_R_nu(n, 1, Partition({1})) == frob_R(n, 1));
        CHECK(frob_R_nu(n, 2, Partition({2})) +
                  frob_R_nu(n, 2, Partition({1, 1})) ==
              frob_R(n, 2));
    }

    CHECK_THROWS_AS(frob_S(2, 1, Partition({2})), Error);
    CHECK_THROWS_AS(frob_R_nu(2, 2, Partition({1})), Error);
}

TEST_CASE("delta of e_n at Schur functions") {
    auto d = delta_snu_en(2, Partition({1}));
    CHECK(d.value ==
          SymFunc::schur(Partition({2})) +
              SymFunc::schur(Partition({1, 1}))
                  .scaled(frac(QtLaurent(1) + mono(1, 1, 0) + mono(1, 0, 1),
                               QtLaurent(1))));
    CHECK(d.schur_positive);

    for (int n = 1; n <= 4; ++n)
        CHECK(delta_snu_en(n, Partition()).value == SymFunc::elementary(n));

    // Single fixed point: s_nu[1] is 1 for one-row shapes and 0 otherwise.
    CHECK(delta_snu_en(1, Partition({2})).value ==
          SymFunc::schur(Partition({1})));
    CHECK(delta_snu_en(1, Partition({1, 1})).value == SymFunc::zero(1));

    // The positivity report holds on the small range we can afford to scan.
    for (int n = 2; n <= 3; ++n)
        for (int l = 1; l <= 2; ++l)
            for (const Partition &nu : partitions_of(l))
                CHECK(delta_snu_en(n, nu).schur_positive);
}
