#pragma once

// Integer partitions and their Ferrers diagrams, French orientation: row 0 is
// the longest row and sits at the bottom, cell (row, col) with col < part(row).
// Also the symmetric-group cycle-type table keyed by partitions.

#include "exactnum/rational.hpp"
#include "support/error.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qth {

struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell &, const Cell &) = default;
};

class Partition {
public:
    Partition() = default; // the empty partition of 0
    explicit Partition(std::vector<int> parts);

    static Partition single_row(int n);
    static Partition single_column(int n);
    // Accepts "3,1,1" or "(3,1,1)"; "" and "()" give the empty partition.
    static Partition parse(const std::string &text);

    int size() const { return size_; } // sum of parts
    int num_parts() const { return static_cast<int>(parts_.size()); }
    // 0-based; returns 0 past the end so arm/leg arithmetic needs no guards.
    int part(int i) const {
        return (i >= 0 && i < num_parts()) ? parts_[i] : 0;
    }
    const std::vector<int> &parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(Cell x) const {
        return x.row >= 0 && x.col >= 0 && x.col < part(x.row);
    }
    // All diagram cells, row by row from the bottom.
    std::vector<Cell> cells() const;

    // n(mu) = sum over rows of row_index * part, i.e. sum of t-degrees of the
    // diagram cells.
    int n_stat() const;

    std::string to_string() const;

    friend bool operator==(const Partition &, const Partition &) = default;
    // Lexicographic on the part vectors; gives std::map a deterministic order.
    friend bool operator<(const Partition &a, const Partition &b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Arm and leg of a diagram cell: cells strictly right in the row, cells
// strictly above in the column. Throws CellOutsideDiagram.
std::pair<int, int> arm_leg(const Partition &mu, Cell x);

// True when a >= b in dominance order (same size required, else false).
bool dominates(const Partition &a, const Partition &b);

// All partitions of n, reverse-lexicographic: (n) first, (1^n) last. This
// order refines dominance from the top down.
std::vector<Partition> partitions_of(int n);

// prod over part values k of k^{m_k} * m_k!, the centralizer order z_lambda.
BigInt centralizer_order(const Partition &lambda);

struct CycleType {
    Partition lambda;
    BigInt z; // centralizer_order(lambda)
};

// One entry per partition of n, in partitions_of order.
std::vector<CycleType> cycle_types(int n);

} // namespace qth
