#include "macdonald/triangular.hpp"

#include "exactnum/linsolve.hpp"

namespace qth {

namespace {

// Columns of the linear map f -> f[Z(1-v)] in Schur coordinates, where the
// multiplier is 1-q or 1-t.
std::vector<SymFunc> plethysm_columns(int n, bool q_side) {
    QtFraction rule = QtFraction::from_laurent(
        QtLaurent(1) -
        QtLaurent::monomial(BigRational(1), q_side ? 1 : 0, q_side ? 0 : 1));
    std::vector<SymFunc> cols;
    for (const Partition &nu : partitions_of(n))
        cols.push_back(SymFunc::schur(nu).plethys_sub(rule));
    return cols;
}

} // namespace

SymFunc h_tilde_by_triangularity(const Partition &mu) {
    int n = mu.size();
    std::vector<Partition> lambdas = partitions_of(n);
    int k = static_cast<int>(lambdas.size());
    std::vector<SymFunc> q_cols = plethysm_columns(n, true);
    std::vector<SymFunc> t_cols = plethysm_columns(n, false);
    Partition conj = mu.conjugate();

    FractionMatrix a;
    FractionVector b;
    // Vanishing constraints: rows indexed by the excluded support.
    for (int side = 0; side < 2; ++side) {
        const std::vector<SymFunc> &cols = side == 0 ? q_cols : t_cols;
        const Partition &floor = side == 0 ? mu : conj;
        for (const Partition &lambda : lambdas) {
            if (dominates(lambda, floor)) continue;
            FractionVector row(k);
            for (int j = 0; j < k; ++j)
                row[j] = cols[j].schur_coeff(lambda);
            a.push_back(std::move(row));
            b.emplace_back();
        }
    }
    // Normalization: coefficient of s_(n) equals 1.
    {
        FractionVector row(k);
        for (int j = 0; j < k; ++j)
            row[j] = QtFraction(lambdas[j] == Partition::single_row(n) ? 1 : 0);
        a.push_back(std::move(row));
        b.emplace_back(QtFraction(1));
    }

    FractionVector x = solve_unique(std::move(a), std::move(b));
    SymFunc f = SymFunc::zero(n);
    for (int j = 0; j < k; ++j)
        if (!x[j].is_zero()) f += SymFunc::schur(lambdas[j]).scaled(x[j]);
    return f;
}

} // namespace qth
