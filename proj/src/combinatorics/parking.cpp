#include "combinatorics/parking.hpp"

#include "support/error.hpp"

namespace qth {

namespace {

// Runs the parking process; returns false when some car is left over.
bool park(const std::vector<int> &f, std::vector<int> *spots) {
    int n = static_cast<int>(f.size());
    std::vector<bool> taken(n + 1, false);
    spots->assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int s = f[i];
        while (s <= n && taken[s]) ++s;
        if (s > n) return false;
        taken[s] = true;
        (*spots)[i] = s;
    }
    return true;
}

int displacement(const std::vector<int> &f, const std::vector<int> &spots) {
    int w = 0;
    for (std::size_t i = 0; i < f.size(); ++i) w += spots[i] - f[i];
    return w;
}

// Visits every function {1..n} -> {1..n} in lexicographic order.
template <typename Fn> void for_each_function(int n, Fn &&visit) {
    std::vector<int> f(n, 1);
    for (;;) {
        visit(f);
        int i = n - 1;
        while (i >= 0 && f[i] == n) f[i--] = 1;
        if (i < 0) break;
        ++f[i];
    }
}

} // namespace

std::vector<ParkingFn> parking_enumerate(int n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "parking_enumerate needs n >= 1");
    std::vector<ParkingFn> out;
    std::vector<int> spots;
    for_each_function(n, [&](const std::vector<int> &f) {
        if (!park(f, &spots)) return;
        ParkingFn p;
        p.f = f;
        p.spots = spots;
        p.weight = displacement(f, spots);
        out.push_back(std::move(p));
    });
    return out;
}

std::map<Partition, std::map<int, long>> parking_fixed_counts(int n) {
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "parking_fixed_counts needs n >= 1");
    std::map<Partition, std::map<int, long>> out;
    for (const Partition &lambda : partitions_of(n)) {
        // Canonical permutation of this type: cycles on consecutive blocks.
        // A function is fixed exactly when it is constant on each block, so
        // enumerate one value per block.
        int blocks = lambda.num_parts();
        std::map<int, long> by_weight;
        std::vector<int> choice(blocks, 1);
        std::vector<int> f(n), spots;
        for (;;) {
            int pos = 0;
            for (int b = 0; b < blocks; ++b)
                for (int r = 0; r < lambda.part(b); ++r) f[pos++] = choice[b];
            if (park(f, &spots)) ++by_weight[displacement(f, spots)];
            int i = blocks - 1;
            while (i >= 0 && choice[i] == n) choice[i--] = 1;
            if (i < 0) break;
            ++choice[i];
        }
        out.emplace(lambda, std::move(by_weight));
    }
    return out;
}

} // namespace qth
