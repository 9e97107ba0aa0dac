#pragma once

// Parking functions on n spots. A preference function f: {1..n} -> {1..n} is
// a parking function when every car finds a spot under the usual process (car
// i takes the first free spot >= f(i)). The weight is the total displacement
// sum(s_i - f_i), equivalently binom(n+1,2) - sum f(i).

#include "combinatorics/partition.hpp"

#include <map>
#include <vector>

namespace qth {

struct ParkingFn {
    std::vector<int> f;     // preferences, values in 1..n
    std::vector<int> spots; // spots[i] = final spot of car i+1
    int weight = 0;
};

// All (n+1)^(n-1) parking functions, lexicographic in f.
std::vector<ParkingFn> parking_enumerate(int n);

// Fixed-point counts of the domain action (f -> f o sigma), binned by weight:
// result[lambda][w] = number of weight-w parking functions constant on the
// cycles of a permutation of cycle type lambda. Weight is constant on orbits,
// so the count only depends on the cycle type.
std::map<Partition, std::map<int, long>> parking_fixed_counts(int n);

} // namespace qth
