#include "doctest.h"

#include "exactnum/linsolve.hpp"
#include "exactnum/qt_fraction.hpp"
#include "exactnum/qt_laurent.hpp"
#include "support/error.hpp"

#include <random>

using namespace qth;

namespace {

QtLaurent mono(long c, int qe, int te) {
    return QtLaurent::monomial(BigRational(c), qe, te);
}

// 1 - q^a t^b
QtLaurent one_minus(int a, int b) {
    QtLaurent p(1);
    p += mono(-1, a, b);
    return p;
}

QtFraction frac(const QtLaurent &n, const QtLaurent &d) {
    return QtFraction::make(n, d);
}

} // namespace

TEST_CASE("laurent basic arithmetic and printing order") {
    QtLaurent p = one_minus(1, 0); // 1 - q
    QtLaurent q = one_minus(0, 1); // 1 - t
    QtLaurent prod = p * q;
    CHECK(prod.coeff(1, 1) == 1);
    CHECK(prod.coeff(1, 0) == -1);
    CHECK(prod.coeff(0, 1) == -1);
    CHECK(prod.coeff(0, 0) == 1);
    CHECK(prod.to_string() == "q*t - q - t + 1");
    CHECK((p - p).is_zero());
    CHECK(p.total_degree() == 1);
    CHECK(prod.total_degree() == 2);
}

TEST_CASE("laurent substitutions") {
    QtLaurent m = mono(1, 2, 3); // q^2 t^3
    CHECK(m.power_subst(2) == mono(1, 4, 6));
    CHECK(m.subst_t_qinv() == mono(1, -1, 0));
    CHECK(m.subst_t_inv() == mono(1, 2, -3));
    CHECK(m.swap_qt() == mono(1, 3, 2));
    QtLaurent p = one_minus(1, 1); // 1 - qt
    CHECK(p.subst_t_qinv().is_zero());
    CHECK(p.subst_t_one() == one_minus(1, 0));
    CHECK(p.eval(BigRational(1), BigRational(1)) == 0);
    CHECK(p.eval(BigRational(2), BigRational(3)) == -5);
}

TEST_CASE("exact division") {
    QtLaurent a = one_minus(0, 2); // 1 - t^2
    QtLaurent b = one_minus(0, 1); // 1 - t
    QtLaurent q;
    REQUIRE(try_divide(a, b, &q));
    QtLaurent expect(1);
    expect += mono(1, 0, 1);
    CHECK(q == expect); // 1 + t
    CHECK_FALSE(try_divide(one_minus(1, 0), b, nullptr));
    // Laurent units: q^-1 divides anything.
    REQUIRE(try_divide(b, mono(1, -1, 0), &q));
    CHECK(q == b.scaled(BigRational(1), 1, 0));
}

TEST_CASE("gcd examples") {
    // Canonical normalization is positive leading coefficient under
    // descending lex (q before t), so the pure-t gcd comes out as t - 1.
    QtLaurent g = qt_gcd(one_minus(0, 2), one_minus(0, 1));
    QtLaurent t_minus_1 = mono(1, 0, 1);
    t_minus_1 += mono(-1, 0, 0);
    CHECK(g == t_minus_1);
    CHECK(try_divide(one_minus(0, 2), g, nullptr));
    CHECK(try_divide(one_minus(0, 1), g, nullptr));

    QtLaurent q_minus_t = mono(1, 1, 0);
    q_minus_t += mono(-1, 0, 1);
    QtLaurent q_plus_t = mono(1, 1, 0);
    q_plus_t += mono(1, 0, 1);
    CHECK(qt_gcd(q_minus_t, q_plus_t) == QtLaurent(1));

    QtLaurent diff_sq = q_minus_t * q_plus_t; // q^2 - t^2
    CHECK(qt_gcd(diff_sq, q_minus_t * q_minus_t) == q_minus_t);

    CHECK(qt_gcd(QtLaurent(), QtLaurent()).is_zero());
    // Common monomial factors are kept for polynomial inputs.
    QtLaurent a = one_minus(0, 1).scaled(BigRational(1), 1, 0); // q(1-t)
    CHECK(qt_gcd(a, one_minus(0, 1)) == t_minus_1);
    CHECK(qt_gcd(a, a.scaled(BigRational(1), 1, 0)) ==
          t_minus_1.scaled(BigRational(1), 1, 0));
}

TEST_CASE("gcd randomized divisibility") {
    std::mt19937 rng(12345);
    auto rand_poly = [&rng]() {
        std::uniform_int_distribution<int> e(0, 3), c(-3, 3);
        QtLaurent p;
        for (int i = 0; i < 4; ++i) p.add_term(e(rng), e(rng), BigRational(c(rng)));
        return p;
    };
    for (int trial = 0; trial < 40; ++trial) {
        QtLaurent a = rand_poly(), b = rand_poly(), m = rand_poly();
        QtLaurent am = a * m, bm = b * m;
        if (am.is_zero() || bm.is_zero()) continue;
        QtLaurent g = qt_gcd(am, bm);
        CHECK(try_divide(am, g, nullptr));
        CHECK(try_divide(bm, g, nullptr));
        if (!m.is_zero()) CHECK(try_divide(g, m, nullptr));
    }
}

TEST_CASE("fraction canonical arithmetic") {
    QtFraction a = frac(one_minus(0, 2), one_minus(0, 1));
    QtLaurent one_plus_t(1);
    one_plus_t += mono(1, 0, 1);
    CHECK(a == QtFraction::from_laurent(one_plus_t));
    CHECK(a.is_polynomial());

    QtLaurent t_minus_q = mono(1, 0, 1);
    t_minus_q += mono(-1, 1, 0);
    QtFraction b = frac(t_minus_q, t_minus_q);
    CHECK(b.is_one());

    QtFraction c = frac(one_minus(3, 0), one_minus(1, 0));
    QtLaurent expect(1);
    expect += mono(1, 1, 0);
    expect += mono(1, 2, 0);
    CHECK(c == QtFraction::from_laurent(expect));

    QtFraction half(make_rational(1, 2));
    CHECK((half + half).is_one());
    CHECK((half * QtFraction(2)).is_one());
    CHECK_THROWS_AS(half / QtFraction(), Error);
}

TEST_CASE("fraction canonical form is idempotent and structural") {
    QtFraction f = frac(one_minus(1, 0) * one_minus(0, 1), one_minus(1, 1));
    QtFraction again = QtFraction::make(
        f.num().scaled(f.coeff(), f.scale_q(), f.scale_t()), f.den());
    CHECK(f == again);
    // (1-q)(1-t)/(1-qt) shares no factor; the sign normalization turns the
    // denominator into qt-1 and pushes a -1 into the scalar.
    CHECK(f.coeff() == -1);
    CHECK(f.num() == one_minus(1, 0) * one_minus(0, 1));
    CHECK(f.den() == one_minus(1, 1) * QtLaurent(-1));
}

TEST_CASE("fraction substitute rules") {
    QtFraction f = QtFraction::from_laurent(one_minus(1, 1)); // 1 - qt
    CHECK(f.substitute(SubstRule::TQInv).is_zero());

    QtFraction g = frac(QtLaurent(1), one_minus(1, 0) * one_minus(0, 1));
    CHECK_THROWS_AS(g.substitute(SubstRule::TOne), Error);
    try {
        g.substitute(SubstRule::TOne);
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::DenominatorVanishes);
    }

    QtFraction m = QtFraction::monomial(BigRational(1), 2, 3);
    CHECK(m.substitute(SubstRule::PowerK, 2) ==
          QtFraction::monomial(BigRational(1), 4, 6));

    // t -> 1 kills the numerator of (1-t)/(1-q); q -> 1 kills its denominator.
    QtFraction h = frac(one_minus(0, 1), one_minus(1, 0));
    CHECK(h.substitute(SubstRule::TOne).is_zero());
    CHECK_THROWS_AS(h.substitute(SubstRule::QOne), Error);
}

TEST_CASE("substitute commutes with field arithmetic when defined") {
    QtFraction a = frac(one_minus(2, 0), one_minus(0, 1));
    QtFraction b = frac(one_minus(0, 3), one_minus(2, 1));
    QtFraction sum = a + b, prod = a * b;
    for (int k = 1; k <= 3; ++k) {
        CHECK(sum.substitute(SubstRule::PowerK, k) ==
              a.substitute(SubstRule::PowerK, k) + b.substitute(SubstRule::PowerK, k));
        CHECK(prod.substitute(SubstRule::PowerK, k) ==
              a.substitute(SubstRule::PowerK, k) * b.substitute(SubstRule::PowerK, k));
    }
}

TEST_CASE("field axioms on pseudo random triples") {
    std::mt19937 rng(987);
    std::uniform_int_distribution<int> e(0, 2), c(-2, 2);
    auto rand_fraction = [&]() {
        QtLaurent n, d;
        for (int i = 0; i < 3; ++i) n.add_term(e(rng), e(rng), BigRational(c(rng)));
        while (d.is_zero())
            for (int i = 0; i < 3; ++i) d.add_term(e(rng), e(rng), BigRational(c(rng)));
        return QtFraction::make(n.is_zero() ? QtLaurent(1) : n, d);
    };
    for (int trial = 0; trial < 25; ++trial) {
        QtFraction a = rand_fraction(), b = rand_fraction(), cc = rand_fraction();
        CHECK((a + b) + cc == a + (b + cc));
        CHECK((a * b) * cc == a * (b * cc));
        CHECK(a * (b + cc) == a * b + a * cc);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        CHECK(a + (-a) == QtFraction());
    }
}

TEST_CASE("solve_linear examples") {
    QtFraction one(1), zero;
    QtFraction q = QtFraction::monomial(BigRational(1), 1, 0);
    QtFraction t = QtFraction::monomial(BigRational(1), 0, 1);

    FractionMatrix ident{{one, zero}, {zero, one}};
    FractionVector rhs{one, q};
    FractionVector x = solve_linear(ident, rhs);
    CHECK(x[0] == one);
    CHECK(x[1] == q);

    FractionMatrix a{{one, one}, {q, t}};
    FractionVector b{one, zero};
    x = solve_linear(a, b);
    QtLaurent t_minus_q = mono(1, 0, 1);
    t_minus_q += mono(-1, 1, 0);
    CHECK(x[0] == QtFraction::make(mono(1, 0, 1), t_minus_q));      // t/(t-q)
    CHECK(x[1] == QtFraction::make(mono(-1, 1, 0), t_minus_q));     // q/(q-t)

    FractionMatrix sing{{one, one}, {one, one}};
    CHECK_THROWS_AS(solve_linear(sing, rhs), Error);
}

TEST_CASE("series truncation") {
    QtFraction g = frac(QtLaurent(1), one_minus(1, 0) * one_minus(0, 1));
    auto s = series_truncate(g, 2);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j) CHECK(s.at({i, j}) == 1);

    QtFraction h = frac(QtLaurent(1), one_minus(1, 1));
    auto sh = series_truncate(h, 4);
    CHECK(sh.size() == 3);
    CHECK(sh.at({0, 0}) == 1);
    CHECK(sh.at({1, 1}) == 1);
    CHECK(sh.at({2, 2}) == 1);

    QtLaurent one_plus_q(1);
    one_plus_q += mono(1, 1, 0);
    QtFraction p = frac(one_plus_q, one_minus(0, 1));
    auto sp = series_truncate(p, 1);
    CHECK(sp.size() == 3);
    CHECK(sp.at({0, 0}) == 1);
    CHECK(sp.at({1, 0}) == 1);
    CHECK(sp.at({0, 1}) == 1);

    CHECK_THROWS_AS(series_truncate(frac(QtLaurent(1), mono(1, 1, 0)), 2), Error);
}

TEST_CASE("series truncation is multiplicative") {
    QtFraction a = frac(one_minus(0, 2), one_minus(1, 0));
    QtFraction b = frac(QtLaurent(1), one_minus(0, 1));
    auto sa = series_truncate(a, 4);
    auto sb = series_truncate(b, 4);
    auto sab = series_truncate(a * b, 4);
    std::map<std::pair<int, int>, BigRational> conv;
    for (const auto &[ea, ca] : sa)
        for (const auto &[eb, cb] : sb) {
            int qe = ea.first + eb.first, te = ea.second + eb.second;
            if (qe + te > 4) continue;
            BigRational add = ca * cb;
            conv[{qe, te}] += add;
        }
    for (auto it = conv.begin(); it != conv.end();) {
        if (is_zero(it->second)) it = conv.erase(it);
        else ++it;
    }
    CHECK(conv == sab);
}
