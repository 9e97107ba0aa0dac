#include "macdonald/macdonald.hpp"
#include "macdonald/triangular.hpp"

#include "doctest.h"

#include <random>

using namespace qth;

namespace {

QtLaurent mono(long c, int qe, int te) {
    return QtLaurent::monomial(BigRational(c), qe, te);
}

QtLaurent one_minus(int qe, int te) { return QtLaurent(1) - mono(1, qe, te); }

QtFraction frac(const QtLaurent &n, const QtLaurent &d) {
    return QtFraction::make(n, d);
}

SymFunc swap_coeffs(const SymFunc &f) {
    SymFunc out = SymFunc::zero(f.degree());
    for (const auto &[lambda, c] : f.coeffs())
        out += SymFunc::schur(lambda).scaled(c.swap_qt());
    return out;
}

SymFunc random_symfunc(int degree, std::mt19937 &rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    SymFunc f = SymFunc::zero(degree);
    for (const Partition &lambda : partitions_of(degree)) {
        int c = coeff(rng);
        if (c) f += SymFunc::schur(lambda).scaled(QtFraction(c));
    }
    return f;
}

} // namespace

TEST_CASE("macdonald P at degree 2") {
    CHECK(macdonald_P(Partition({1})) == SymFunc::schur(Partition({1})));
    CHECK(macdonald_P(Partition({1, 1})) ==
          SymFunc::schur(Partition({1, 1})));

    auto m_coeffs = macdonald_P(Partition({2})).to_basis(SymBasis::Monomial);
    REQUIRE(m_coeffs.size() == 2);
    CHECK(m_coeffs.at(Partition({2})) == QtFraction(1));
    CHECK(m_coeffs.at(Partition({1, 1})) ==
          frac((QtLaurent(1) + mono(1, 1, 0)) * one_minus(0, 1),
               one_minus(1, 1)));
}

TEST_CASE("macdonald P orthogonality and triangularity") {
    for (int n = 1; n <= 5; ++n) {
        const MacdonaldTable &table = macdonald_table(n);
        for (const Partition &a : table.mus)
            for (const Partition &b : table.mus) {
                if (a == b) continue;
                CHECK(qt_inner(table.p_poly.at(a), table.p_poly.at(b))
                          .is_zero());
            }
        for (const Partition &a : table.mus) {
            auto m_coeffs = table.p_poly.at(a).to_basis(SymBasis::Monomial);
            CHECK(m_coeffs.at(a) == QtFraction(1));
            for (const auto &[mu, c] : m_coeffs)
                CHECK(dominates(a, mu));
        }
    }
}

TEST_CASE("macdonald J") {
    CHECK(macdonald_J(Partition({1})) ==
          SymFunc::schur(Partition({1}))
              .scaled(frac(one_minus(0, 1), QtLaurent(1))));
    CHECK(macdonald_J(Partition({2})) ==
          macdonald_P(Partition({2}))
              .scaled(frac(one_minus(1, 1) * one_minus(0, 1), QtLaurent(1))));
    CHECK(macdonald_J(Partition({1, 1})) ==
          macdonald_P(Partition({1, 1}))
              .scaled(frac(one_minus(0, 1) * one_minus(0, 2), QtLaurent(1))));
    // Integrality in the monomial basis, degrees through 5.
    for (int n = 3; n <= 5; ++n)
        for (const Partition &mu : partitions_of(n))
            CHECK_NOTHROW(macdonald_J(mu));
}

TEST_CASE("transformed polynomials at small degree") {
    CHECK(h_tilde(Partition({1})) == SymFunc::schur(Partition({1})));
    SymFunc s2 = SymFunc::schur(Partition({2}));
    SymFunc s11 = SymFunc::schur(Partition({1, 1}));
    CHECK(h_tilde(Partition({2})) ==
          s2 + s11.scaled(QtFraction::monomial(BigRational(1), 1, 0)));
    CHECK(h_tilde(Partition({1, 1})) ==
          s2 + s11.scaled(QtFraction::monomial(BigRational(1), 0, 1)));
}

TEST_CASE("table invariants through degree 7") {
    for (int n = 1; n <= 7; ++n) {
        const MacdonaldTable &table = macdonald_table(n);
        CHECK(table.validated);
        for (const Partition &mu : table.mus) {
            const SymFunc &h = table.h(mu);
            // Positivity and normalization re-checked from the outside.
            for (const auto &[lambda, c] : h.coeffs())
                CHECK(c.to_laurent().has_nonneg_integer_coeffs());
            CHECK(h.schur_coeff(Partition::single_row(n)) == QtFraction(1));
            CHECK(hall_inner(SymFunc::elementary(n), h) ==
                  QtFraction::from_laurent(t_mu(mu)));
        }
        // Conjugation symmetry exchanges q and t.
        for (const Partition &mu : table.mus)
            CHECK(table.h(mu.conjugate()) == swap_coeffs(table.h(mu)));
    }
}

TEST_CASE("star orthogonality of the transformed basis") {
    for (int n = 1; n <= 5; ++n) {
        const MacdonaldTable &table = macdonald_table(n);
        for (const Partition &a : table.mus)
            for (const Partition &b : table.mus) {
                QtFraction v = star_inner(table.h(a), table.h(b));
                if (a == b)
                    CHECK(!v.is_zero());
                else
                    CHECK(v.is_zero());
            }
    }
}

TEST_CASE("triangularity characterization agrees") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition &mu : partitions_of(n))
            CHECK(h_tilde_by_triangularity(mu) == h_tilde(mu));
}

TEST_CASE("expansion in the transformed basis") {
    auto unit = expand_in_htilde(h_tilde(Partition({2})));
    REQUIRE(unit.size() == 1);
    CHECK(unit.at(Partition({2})) == QtFraction(1));

    QtFraction inv_tq =
        frac(QtLaurent(1), mono(1, 0, 1) - mono(1, 1, 0)); // 1/(t-q)
    auto e2 = expand_in_htilde(SymFunc::elementary(2));
    CHECK(e2.at(Partition({1, 1})) == inv_tq);
    CHECK(e2.at(Partition({2})) == -inv_tq);

    auto s2 = expand_in_htilde(SymFunc::schur(Partition({2})));
    CHECK(s2.at(Partition({2})) ==
          inv_tq * QtFraction::monomial(BigRational(1), 0, 1));
    CHECK(s2.at(Partition({1, 1})) ==
          -(inv_tq * QtFraction::monomial(BigRational(1), 1, 0)));
}

TEST_CASE("nabla") {
    CHECK(nabla(h_tilde(Partition({2}))) ==
          h_tilde(Partition({2}))
              .scaled(QtFraction::monomial(BigRational(1), 1, 0)));
    CHECK(nabla(SymFunc::elementary(1)) == SymFunc::schur(Partition({1})));

    SymFunc expect = SymFunc::schur(Partition({2})) +
                     SymFunc::schur(Partition({1, 1}))
                         .scaled(frac(mono(1, 1, 0) + mono(1, 0, 1),
                                      QtLaurent(1)));
    CHECK(nabla(SymFunc::elementary(2)) == expect);
}

TEST_CASE("delta operators") {
    SymFunc h21 = h_tilde(Partition({2, 1}));
    CHECK(delta_f(SymFunc::elementary(1), h21) ==
          h21.scaled(frac(QtLaurent(1) + mono(1, 1, 0) + mono(1, 0, 1),
                          QtLaurent(1))));

    // Delta at e_n coincides with nabla in degree n.
    std::mt19937 rng(5150);
    for (int n = 1; n <= 5; ++n) {
        SymFunc en = SymFunc::elementary(n);
        CHECK(delta_f(en, en) == nabla(en));
        SymFunc g = random_symfunc(n, rng);
        if (!g.is_zero()) CHECK(delta_f(en, g) == nabla(g));
    }

    SymFunc expect =
        SymFunc::schur(Partition({2}))
            .scaled(frac(QtLaurent(1) + mono(1, 1, 0) + mono(1, 0, 1),
                         QtLaurent(1))) +
        SymFunc::schur(Partition({1, 1}))
            .scaled(frac(mono(1, 1, 0) + mono(1, 0, 1) + mono(1, 2, 0) +
                             mono(1, 1, 1) + mono(1, 0, 2),
                         QtLaurent(1)));
    CHECK(delta_f(SymFunc::schur(Partition({1})),
                  nabla(SymFunc::elementary(2))) == expect);
}

TEST_CASE("nabla and delta are star-self-adjoint") {
    std::mt19937 rng(31337);
    for (int n = 2; n <= 4; ++n) {
        SymFunc f = random_symfunc(n, rng);
        SymFunc g = random_symfunc(n, rng);
        CHECK(star_inner(nabla(f), g) == star_inner(f, nabla(g)));
        SymFunc e1 = SymFunc::elementary(1);
        CHECK(star_inner(delta_f(e1, f), g) == star_inner(f, delta_f(e1, g)));
    }
}
