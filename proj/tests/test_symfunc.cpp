#include "symfunc/symfunc.hpp"

#include "combinatorics/diagram_stats.hpp"
#include "doctest.h"

#include <random>

using namespace qth;

namespace {

QtLaurent mono(long c, int qe, int te) {
    return QtLaurent::monomial(BigRational(c), qe, te);
}

QtFraction frac(const QtLaurent &n, const QtLaurent &d) {
    return QtFraction::make(n, d);
}

QtLaurent one_minus(int qe, int te) { return QtLaurent(1) - mono(1, qe, te); }

SymFunc random_symfunc(int degree, std::mt19937 &rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    SymFunc f = SymFunc::zero(degree);
    for (const Partition &lambda : partitions_of(degree)) {
        int c = coeff(rng);
        if (c) f += SymFunc::schur(lambda).scaled(QtFraction(c));
    }
    return f;
}

} // namespace

TEST_CASE("characters by Murnaghan-Nakayama") {
    CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(mn_character(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(mn_character(Partition({3, 1, 1}), Partition({1, 1, 1, 1, 1})) == 6);
    for (int n = 1; n <= 7; ++n)
        for (const Partition &rho : partitions_of(n)) {
            // Trivial and sign characters.
            CHECK(mn_character(Partition::single_row(n), rho) == 1);
            int sign = (n - rho.num_parts()) % 2 ? -1 : 1;
            CHECK(mn_character(Partition::single_column(n), rho) == sign);
        }
}

TEST_CASE("power sums pair by column orthogonality") {
    // hall_inner works in Schur coordinates, so <p_a, p_b> = delta z_a tests
    // the full character table.
    for (int n = 1; n <= 6; ++n)
        for (const Partition &a : partitions_of(n))
            for (const Partition &b : partitions_of(n)) {
                QtFraction inner = hall_inner(SymFunc::power(a),
                                              SymFunc::power(b));
                if (a == b)
                    CHECK(inner == QtFraction(BigRational(centralizer_order(a))));
                else
                    CHECK(inner.is_zero());
            }
}

TEST_CASE("small basis expansions") {
    CHECK(SymFunc::elementary(2) == SymFunc::schur(Partition({1, 1})));
    CHECK(SymFunc::homogeneous(2) == SymFunc::schur(Partition({2})));
    CHECK(SymFunc::power_sum(2) ==
          SymFunc::schur(Partition({2})) -
              SymFunc::schur(Partition({1, 1})));
    CHECK(SymFunc::monomial_sym(Partition({1, 1})) == SymFunc::elementary(2));
    CHECK(SymFunc::monomial_sym(Partition({2})) == SymFunc::power_sum(2));

    // h_1^3 = s_3 + 2 s_21 + s_111 (Kostka numbers of weight (1,1,1)).
    SymFunc h1 = SymFunc::homogeneous(1);
    SymFunc cube = h1 * h1 * h1;
    CHECK(cube.schur_coeff(Partition({3})) == QtFraction(1));
    CHECK(cube.schur_coeff(Partition({2, 1})) == QtFraction(2));
    CHECK(cube.schur_coeff(Partition({1, 1, 1})) == QtFraction(1));
}

TEST_CASE("basis round trips") {
    std::mt19937 rng(4242);
    for (int degree = 1; degree <= 6; ++degree) {
        SymFunc f = random_symfunc(degree, rng);
        for (SymBasis b : {SymBasis::Monomial, SymBasis::Elementary,
                           SymBasis::Homogeneous, SymBasis::Power,
                           SymBasis::Schur}) {
            SymFunc back = SymFunc::from_basis(degree, f.to_basis(b), b);
            CHECK(back == f);
        }
    }
}

TEST_CASE("hall inner product") {
    CHECK(hall_inner(SymFunc::schur(Partition({2})),
                     SymFunc::schur(Partition({2}))) == QtFraction(1));
    CHECK(hall_inner(SymFunc::power_sum(2), SymFunc::power_sum(2)) ==
          QtFraction(2));
    SymFunc s1 = SymFunc::schur(Partition({1}));
    CHECK(hall_inner(s1 * s1, SymFunc::schur(Partition({1, 1}))) ==
          QtFraction(1));
    // Degree mismatch pairs to zero.
    CHECK(hall_inner(s1, SymFunc::schur(Partition({2}))).is_zero());
}

TEST_CASE("omega involution") {
    for (int n = 1; n <= 5; ++n)
        CHECK(SymFunc::elementary(n).dual() == SymFunc::homogeneous(n));
    CHECK(SymFunc::schur(Partition({2, 1})).dual() ==
          SymFunc::schur(Partition({2, 1})));
    CHECK(SymFunc::power_sum(2).dual() == -SymFunc::power_sum(2));
    std::mt19937 rng(99);
    for (int degree = 1; degree <= 6; ++degree) {
        SymFunc f = random_symfunc(degree, rng);
        CHECK(f.dual().dual() == f);
    }
}

TEST_CASE("plethystic substitution") {
    QtFraction inv_1mt = frac(QtLaurent(1), one_minus(0, 1));
    SymFunc p1 = SymFunc::power_sum(1);
    CHECK(p1.plethys_sub(inv_1mt) == p1.scaled(inv_1mt));

    QtFraction inv_m = frac(QtLaurent(1), one_minus(1, 0) * one_minus(0, 1));
    CHECK(SymFunc::homogeneous(1).plethys_sub(inv_m) ==
          SymFunc::schur(Partition({1})).scaled(inv_m));

    QtFraction m_factor = frac(one_minus(1, 0) * one_minus(0, 1), QtLaurent(1));
    SymFunc p2 = SymFunc::power_sum(2);
    auto coeffs = p2.plethys_sub(m_factor).to_basis(SymBasis::Power);
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs.at(Partition({2})) ==
          frac(one_minus(2, 0) * one_minus(0, 2), QtLaurent(1)));

    std::mt19937 rng(2024);
    QtFraction z_rule(1);
    for (int degree = 1; degree <= 5; ++degree) {
        SymFunc f = random_symfunc(degree, rng);
        SymFunc g = random_symfunc(degree, rng);
        // Substituting Z itself changes nothing.
        CHECK(f.plethys_sub(z_rule) == f);
        // Algebra homomorphism in f.
        CHECK((f * g).plethys_sub(m_factor) ==
              f.plethys_sub(m_factor) * g.plethys_sub(m_factor));
        // Z(1-q)(1-t) and Z/((1-q)(1-t)) are inverse substitutions.
        CHECK(f.plethys_sub(m_factor).plethys_sub(inv_m) == f);
    }

    // The twist inverts t in the coefficients before substituting.
    SymFunc tf = p1.scaled(QtFraction::monomial(BigRational(1), 0, 2));
    SymFunc twisted = tf.plethys_sub(z_rule, CoeffTwist::InvertT);
    CHECK(twisted == p1.scaled(QtFraction::monomial(BigRational(1), 0, -2)));
}

TEST_CASE("star inner product") {
    QtFraction expect = frac(one_minus(1, 0) * one_minus(0, 1), QtLaurent(1));
    CHECK(star_inner(SymFunc::power_sum(1), SymFunc::power_sum(1)) == expect);

    // p_lambda are star-orthogonal with norm (-1)^{|l|-l(l)} z_l prod (1-q^k)(1-t^k).
    for (const Partition &rho : partitions_of(4)) {
        QtFraction norm = star_inner(SymFunc::power(rho), SymFunc::power(rho));
        QtLaurent prod(1);
        for (int k : rho.parts()) prod *= one_minus(k, 0) * one_minus(0, k);
        BigRational z(centralizer_order(rho));
        if ((4 - rho.num_parts()) % 2) z = -z;
        CHECK(norm == frac(prod, QtLaurent(1)) * QtFraction(z));
    }

    // At q=t=0 the star pairing degenerates to <omega s_lambda, s_mu>.
    for (const Partition &a : partitions_of(4))
        for (const Partition &b : partitions_of(4)) {
            BigRational v =
                star_inner(SymFunc::schur(a), SymFunc::schur(b)).eval(0, 0);
            CHECK(v == (a.conjugate() == b ? 1 : 0));
        }
}

TEST_CASE("finite alphabet evaluation") {
    QtLaurent a = QtLaurent(1) + mono(1, 1, 0) + mono(1, 0, 1);
    CHECK(SymFunc::schur(Partition({1})).eval_alphabet(a) == a);
    CHECK(SymFunc::schur(Partition({1, 1}))
              .eval_alphabet(QtLaurent(1) + mono(1, 1, 0)) == mono(1, 1, 0));

    // s_{1^n}[B_mu] is the top bidegree monomial t^{n(mu)} q^{n(mu')}.
    for (int n = 1; n <= 6; ++n)
        for (const Partition &mu : partitions_of(n))
            CHECK(SymFunc::schur(Partition::single_column(n))
                      .eval_alphabet(b_mu(mu)) == t_mu(mu));

    // e_k vanishes past the alphabet size; multiplicativity.
    CHECK(SymFunc::elementary(3)
              .eval_alphabet(QtLaurent(1) + mono(1, 1, 0))
              .is_zero());
    std::mt19937 rng(7);
    for (int d = 1; d <= 4; ++d) {
        SymFunc f = random_symfunc(d, rng);
        SymFunc g = random_symfunc(d, rng);
        CHECK((f * g).eval_alphabet(a) ==
              f.eval_alphabet(a) * g.eval_alphabet(a));
    }
}

TEST_CASE("principal specialization") {
    CHECK(SymFunc::schur(Partition({1})).principal_spec(1) ==
          QtLaurent(1) + mono(1, 1, 0));
    CHECK(SymFunc::schur(Partition({2})).principal_spec(1) ==
          QtLaurent(1) + mono(1, 1, 0) + mono(1, 2, 0));
    CHECK(SymFunc::schur(Partition({1, 1})).principal_spec(1) == mono(1, 1, 0));
}

TEST_CASE("degree cap") {
    int old = symfunc_degree_cap();
    set_symfunc_degree_cap(4);
    CHECK_THROWS_AS(SymFunc::schur(Partition({5})), Error);
    CHECK_THROWS_AS(SymFunc::homogeneous(3) * SymFunc::homogeneous(2), Error);
    set_symfunc_degree_cap(old);
    CHECK(SymFunc::schur(Partition({5})).degree() == 5);
}
