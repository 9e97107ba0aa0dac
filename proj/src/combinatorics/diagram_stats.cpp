#include "combinatorics/diagram_stats.hpp"

namespace qth {

QtLaurent b_mu(const Partition &mu) {
    QtLaurent sum;
    for (const Cell &x : mu.cells()) sum.add_term(x.col, x.row, BigRational(1));
    return sum;
}

QtLaurent pi_mu(const Partition &mu) {
    QtLaurent prod(1);
    for (const Cell &x : mu.cells()) {
        if (x.row == 0 && x.col == 0) continue;
        QtLaurent factor(1);
        factor.add_term(x.col, x.row, BigRational(-1));
        prod *= factor;
    }
    return prod;
}

QtLaurent loc_denominator(const Partition &mu) {
    QtLaurent prod(1);
    for (const Cell &x : mu.cells()) {
        auto [arm, leg] = arm_leg(mu, x);
        QtLaurent up(1);
        up.add_term(-arm, 1 + leg, BigRational(-1));
        QtLaurent right(1);
        right.add_term(1 + arm, -leg, BigRational(-1));
        prod *= up * right;
    }
    return prod;
}

QtLaurent t_mu(const Partition &mu) {
    return QtLaurent::monomial(BigRational(1), mu.conjugate().n_stat(),
                               mu.n_stat());
}

} // namespace qth
