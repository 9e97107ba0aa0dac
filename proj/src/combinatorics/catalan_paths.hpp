#pragma once

// Dyck-style area sequences: e_1 = 0, e_{k+1} <= e_k + 1, entries >= 0. They
// index the combinatorial side of the q,t-Catalan number via the statistics
// area = sum e_i and dinv = #{i < j : e_j = e_i or e_j = e_i - 1}.

#include <vector>

namespace qth {

struct DyckSeq {
    std::vector<int> e;
    int area = 0;
    int dinv = 0;
};

// Complete enumeration for n letters, lexicographic in e. The list length is
// the n-th Catalan number.
std::vector<DyckSeq> dyck_enumerate(int n);

} // namespace qth
