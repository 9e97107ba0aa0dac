#include "combinatorics/catalan_paths.hpp"

#include "support/error.hpp"

namespace qth {

namespace {

void extend_dyck(int n, std::vector<int> &e, std::vector<DyckSeq> &out) {
    if (static_cast<int>(e.size()) == n) {
        DyckSeq d;
        d.e = e;
        for (int v : e) d.area += v;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (e[j] == e[i] || e[j] == e[i] - 1) ++d.dinv;
        out.push_back(std::move(d));
        return;
    }
    int cap = e.empty() ? 0 : e.back() + 1;
    for (int next = 0; next <= cap; ++next) {
        e.push_back(next);
        extend_dyck(n, e, out);
        e.pop_back();
    }
}

} // namespace

std::vector<DyckSeq> dyck_enumerate(int n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "dyck_enumerate needs n >= 1");
    std::vector<DyckSeq> out;
    std::vector<int> e;
    extend_dyck(n, e, out);
    return out;
}

} // namespace qth
