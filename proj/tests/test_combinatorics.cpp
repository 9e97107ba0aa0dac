#include "combinatorics/catalan_paths.hpp"
#include "combinatorics/diagram_stats.hpp"
#include "combinatorics/parking.hpp"
#include "combinatorics/partition.hpp"

#include "doctest.h"

#include <algorithm>

using namespace qth;

namespace {

QtLaurent mono(long c, int qe, int te) {
    return QtLaurent::monomial(BigRational(c), qe, te);
}

QtLaurent one_minus(int qe, int te) {
    return QtLaurent(1) - mono(1, qe, te);
}

} // namespace

TEST_CASE("partition construction, parsing, conjugation") {
    Partition mu({5, 5, 4, 3, 1});
    CHECK(mu.size() == 18);
    CHECK(mu.num_parts() == 5);
    CHECK(mu.part(0) == 5);
    CHECK(mu.part(7) == 0);
    CHECK(mu.to_string() == "(5,5,4,3,1)");
    CHECK(Partition::parse("5,5,4,3,1") == mu);
    CHECK(Partition::parse("(5,5,4,3,1)") == mu);
    CHECK(Partition::parse("()") == Partition());
    CHECK(mu.conjugate() == Partition({5, 4, 4, 3, 2}));

    CHECK_THROWS_AS(Partition({1, 2}), Error);
    CHECK_THROWS_AS(Partition({2, 0}), Error);
    CHECK_THROWS_AS(Partition::parse("2,x"), Error);

    for (int n = 0; n <= 8; ++n)
        for (const Partition &p : partitions_of(n))
            CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("partition enumeration order and counts") {
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n)
        CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));

    // Reverse-lex refines dominance downward: anything dominating mu appears
    // no later than mu.
    for (int n = 1; n <= 7; ++n) {
        auto ps = partitions_of(n);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j)
                CHECK(!dominates(ps[j], ps[i]));
    }
}

TEST_CASE("dominance order") {
    CHECK(dominates(Partition({3}), Partition({2, 1})));
    CHECK(dominates(Partition({2, 1}), Partition({1, 1, 1})));
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK(!dominates(Partition({2, 2}), Partition({3, 1})));
    // Incomparable pair.
    CHECK(!dominates(Partition({3, 3}), Partition({4, 1, 1})));
    CHECK(!dominates(Partition({4, 1, 1}), Partition({3, 3})));
    // Different sizes never compare.
    CHECK(!dominates(Partition({3}), Partition({2})));
}

TEST_CASE("arm and leg") {
    CHECK(arm_leg(Partition({5, 5, 4, 3, 1}), Cell{1, 1}) ==
          std::pair<int, int>(3, 2));
    CHECK(arm_leg(Partition({1}), Cell{0, 0}) == std::pair<int, int>(0, 0));
    CHECK(arm_leg(Partition({2, 1}), Cell{0, 0}) == std::pair<int, int>(1, 1));
    CHECK_THROWS_AS(arm_leg(Partition({2, 1}), Cell{1, 1}), Error);

    // Arm+leg sums recover the two diagram statistics.
    for (const Partition &mu : partitions_of(6)) {
        int arms = 0, legs = 0;
        for (const Cell &x : mu.cells()) {
            auto [a, l] = arm_leg(mu, x);
            arms += a;
            legs += l;
        }
        CHECK(arms == mu.conjugate().n_stat());
        CHECK(legs == mu.n_stat());
    }
}

TEST_CASE("n_stat") {
    CHECK(Partition({2, 1}).n_stat() == 1);
    CHECK(Partition({1, 1, 1}).n_stat() == 3);
    for (int n = 1; n <= 6; ++n) CHECK(Partition::single_row(n).n_stat() == 0);
}

TEST_CASE("b_mu") {
    CHECK(b_mu(Partition({1})) == QtLaurent(1));
    CHECK(b_mu(Partition({2, 1})) == QtLaurent(1) + mono(1, 1, 0) + mono(1, 0, 1));
    CHECK(b_mu(Partition({3})) == QtLaurent(1) + mono(1, 1, 0) + mono(1, 2, 0));
    for (const Partition &mu : partitions_of(6)) {
        CHECK(b_mu(mu).eval(1, 1) == 6);
        CHECK(b_mu(mu.conjugate()) == b_mu(mu).swap_qt());
    }
}

TEST_CASE("pi_mu") {
    CHECK(pi_mu(Partition({1})) == QtLaurent(1));
    CHECK(pi_mu(Partition({2, 1})) == one_minus(1, 0) * one_minus(0, 1));
    CHECK(pi_mu(Partition({2})) == one_minus(1, 0));
    for (const Partition &mu : partitions_of(5))
        CHECK(pi_mu(mu).eval(0, 0) == 1);
}

TEST_CASE("loc_denominator") {
    CHECK(loc_denominator(Partition({1})) == one_minus(0, 1) * one_minus(1, 0));
    CHECK(loc_denominator(Partition({2})) ==
          one_minus(-1, 1) * one_minus(2, 0) * one_minus(0, 1) * one_minus(1, 0));
    for (int n = 1; n <= 6; ++n)
        for (const Partition &mu : partitions_of(n)) {
            QtLaurent d = loc_denominator(mu);
            CHECK(!d.is_zero());
            CHECK(loc_denominator(mu.conjugate()) == d.swap_qt());
        }
    // Clearing the monomial prefactor gives the all-polynomial form
    // prod (q^a - t^{l+1})(t^l - q^{a+1}).
    for (const Partition &mu : partitions_of(5)) {
        QtLaurent prod(1);
        for (const Cell &x : mu.cells()) {
            auto [a, l] = arm_leg(mu, x);
            prod *= mono(1, a, 0) - mono(1, 0, l + 1);
            prod *= mono(1, 0, l) - mono(1, a + 1, 0);
        }
        int nq = mu.conjugate().n_stat(), nt = mu.n_stat();
        CHECK(loc_denominator(mu).scaled(BigRational(1), nq, nt) == prod);
    }
}

TEST_CASE("t_mu monomial") {
    CHECK(t_mu(Partition({2, 1})) == mono(1, 1, 1));
    CHECK(t_mu(Partition({4})) == mono(1, 6, 0));
    CHECK(t_mu(Partition({1, 1, 1})) == mono(1, 0, 3));
}

TEST_CASE("dyck enumeration") {
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 1; n <= 10; ++n)
        CHECK(dyck_enumerate(n).size() == static_cast<std::size_t>(catalan[n]));

    auto d1 = dyck_enumerate(1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].e == std::vector<int>{0});
    CHECK(d1[0].area == 0);
    CHECK(d1[0].dinv == 0);

    auto d2 = dyck_enumerate(2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].e == std::vector<int>{0, 0});
    CHECK(d2[0].area == 0);
    CHECK(d2[0].dinv == 1);
    CHECK(d2[1].e == std::vector<int>{0, 1});
    CHECK(d2[1].area == 1);
    CHECK(d2[1].dinv == 0);

    QtLaurent sum3;
    for (const DyckSeq &d : dyck_enumerate(3))
        sum3.add_term(d.dinv, d.area, BigRational(1));
    // q^3 + q^2 t + q t^2 + t^3 + q t
    QtLaurent expect = mono(1, 3, 0) + mono(1, 2, 1) + mono(1, 1, 2) +
                       mono(1, 0, 3) + mono(1, 1, 1);
    CHECK(sum3 == expect);
}

TEST_CASE("parking enumeration") {
    const long pf[] = {0, 1, 3, 16, 125, 1296, 16807};
    for (int n = 1; n <= 6; ++n)
        CHECK(parking_enumerate(n).size() == static_cast<std::size_t>(pf[n]));

    auto p1 = parking_enumerate(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].weight == 0);

    // Weight generating function at n=2 is 2 + q.
    auto p2 = parking_enumerate(2);
    std::map<int, int> hist2;
    for (const ParkingFn &p : p2) ++hist2[p.weight];
    CHECK(hist2 == std::map<int, int>{{0, 2}, {1, 1}});

    for (int n = 1; n <= 5; ++n) {
        int maxw = 0;
        for (const ParkingFn &p : parking_enumerate(n)) {
            CHECK(p.weight >= 0);
            maxw = std::max(maxw, p.weight);
            // spots is a permutation of 1..n
            std::vector<int> sorted = p.spots;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < n; ++i) CHECK(sorted[i] == i + 1);
            // displacement identity
            int pref = 0;
            for (int v : p.f) pref += v;
            CHECK(p.weight == n * (n + 1) / 2 - pref);
        }
        CHECK(maxw == n * (n - 1) / 2);
    }
}

TEST_CASE("parking fixed-point counts") {
    for (int n = 2; n <= 5; ++n) {
        auto counts = parking_fixed_counts(n);
        CHECK(counts.size() == partitions_of(n).size());

        // The identity type sees every parking function.
        std::map<int, long> all;
        for (const ParkingFn &p : parking_enumerate(n)) ++all[p.weight];
        CHECK(counts.at(Partition::single_column(n)) == all);

        // An n-cycle fixes only the all-ones function, of maximal weight.
        std::map<int, long> full{{n * (n - 1) / 2, 1}};
        CHECK(counts.at(Partition::single_row(n)) == full);
    }
}

TEST_CASE("cycle types") {
    auto types2 = cycle_types(2);
    REQUIRE(types2.size() == 2);
    CHECK(types2[0].lambda == Partition({2}));
    CHECK(types2[0].z == 2);
    CHECK(types2[1].lambda == Partition({1, 1}));
    CHECK(types2[1].z == 2);

    auto types3 = cycle_types(3);
    CHECK(types3[1].lambda == Partition({2, 1}));
    CHECK(types3[1].z == 2);
    for (int n = 1; n <= 6; ++n) CHECK(cycle_types(n)[0].z == n);

    // Class sizes n!/z partition the group.
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const CycleType &c : cycle_types(n)) total += factorial(n) / c.z;
        CHECK(total == factorial(n));
    }
}
