#pragma once

// Exact linear algebra over Q for large sparse integer matrices: rank,
// reduced row bases, kernels, membership. The elimination itself runs modulo
// machine-word primes for speed, but nothing modular is ever trusted on its
// own; every returned fact carries an exact certificate:
//
//   - rank >= r because the elimination exhibits an r x r pivot submatrix
//     whose determinant is a unit mod p, hence nonzero in Q;
//   - rank <= r because cols - r kernel vectors, reconstructed from the
//     modular images by CRT and rational reconstruction, are verified to
//     annihilate every input row in exact integer arithmetic. The vectors
//     carry unit entries on distinct free columns, so their independence is
//     visible structurally.
//
// Those two bounds meet, which also pins the reduced rows: a verified kernel
// basis spans the full null space, the row space is exactly the vectors
// orthogonal to it, and each claimed reduced row (unit on its pivot column,
// support otherwise on free columns) pairs to zero with every kernel vector
// by construction. So rank, kernel, reduced rows and any reduction done with
// them are exact statements about the rational matrix, with randomness only
// in how long elimination takes. An unlucky prime merely loses rank mod p;
// the verification step then fails against some unprocessed row and the
// elimination resumes there, or another prime joins the CRT.
//
// Rows are streamed: once the rank has not grown for a while, the engine
// attempts certification early and skips the (typically many) remaining
// dependent rows. A failed attempt names an independent row to continue
// from, so nothing is ever assumed.

#include "exactnum/rational.hpp"
#include "support/error.hpp"

#include <utility>
#include <vector>

namespace qth {

struct SparseRow {
    // Column-ascending terms with small integer entries.
    std::vector<std::pair<int, long long>> terms;
};

class RowSpace {
public:
    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(pivot_cols_.size()); }
    int nullity() const { return cols_ - rank(); }
    const std::vector<int> &pivot_cols() const { return pivot_cols_; }
    const std::vector<int> &free_cols() const { return free_cols_; }
    // Input index of the row that produced pivot i.
    const std::vector<int> &pivot_origin() const { return pivot_origin_; }
    // Slot of a pivot (resp. free) column, -1 when the column is not one.
    int pivot_slot(int col) const { return pivot_slot_of_col_[col]; }
    int free_slot(int col) const { return free_slot_of_col_[col]; }
    bool has_tails() const { return has_tails_; }
    // Reduced-row coefficients on the free columns: row i of the reduced
    // basis is e_{pivot_cols[i]} + sum_f tails[i][f] e_{free_cols[f]}.
    const std::vector<std::vector<BigRational>> &tails() const;

    // Kernel basis vector attached to free column index f, dense over cols.
    std::vector<BigRational> kernel_vector(int f) const;

    // Writes v's coefficients along the reduced basis (they are just v at the
    // pivot columns) and the residual on free columns. v lies in the row
    // space iff the residual vanishes.
    void reduce(const std::vector<std::pair<int, BigRational>> &v,
                std::vector<BigRational> *pivot_coeffs,
                std::vector<BigRational> *residual) const;
    bool contains(const SparseRow &v) const;

private:
    friend RowSpace row_space(const std::vector<SparseRow> &, int, bool);
    int cols_ = 0;
    bool has_tails_ = false;
    std::vector<int> pivot_cols_;
    std::vector<int> free_cols_;
    std::vector<int> pivot_origin_;
    std::vector<int> pivot_slot_of_col_; // col -> pivot index, -1 when free
    std::vector<int> free_slot_of_col_;  // col -> free index, -1 when pivot
    std::vector<std::vector<BigRational>> tails_;
};

// The engine. want_tails keeps the exact reduced rows (needed for reduce /
// contains / kernel_vector); without it only rank data is retained, which
// spares memory on the big cells.
RowSpace row_space(const std::vector<SparseRow> &rows, int cols,
                   bool want_tails);

int exact_rank(const std::vector<SparseRow> &rows, int cols);

} // namespace qth
