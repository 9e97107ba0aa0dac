#pragma once

// Multivariate polynomials for the brute-force side. A roster declares groups
// of like-named variables (x_1..x_n, y_1..y_n, a_1..a_l, b_1..b_l, or k full
// sets for the multiset experiments); every group is homogeneous for one slot
// of a multidegree, so bigraded and k-graded pieces are well defined.
// Monomials are exponent vectors over the whole roster, enumerated per
// multidegree in a fixed lexicographic order so that column numbering is
// reproducible across runs.

#include "exactnum/rational.hpp"
#include "support/error.hpp"

#include <map>
#include <string>
#include <vector>

namespace qth {

using Expo = std::vector<int>;
using MultiDeg = std::vector<int>;

struct VarGroup {
    char name = 'x';
    int count = 0;
    int slot = 0; // grading slot this group's degree lands in
};

class VarRoster {
public:
    VarRoster() = default;
    explicit VarRoster(std::vector<VarGroup> groups);

    // x_1..x_n grading into slot 0 (the t-degree), y_1..y_n into slot 1 (the
    // q-degree). This is the bidegree convention (r, s) used everywhere.
    static VarRoster xy(int n);
    // Adds a_1..a_l to slot 0 and b_1..b_l to slot 1.
    static VarRoster xyab(int n, int l);
    // k sets of n variables, one grading slot per set.
    static VarRoster sets(int n, int k);

    int vars() const { return vars_; }
    int slots() const { return slots_; }
    int num_groups() const { return static_cast<int>(groups_.size()); }
    const VarGroup &group(int g) const { return groups_[g]; }
    // Flat variable index of member i of group g.
    int var(int g, int i) const { return base_[g] + i; }

    MultiDeg degree(const Expo &e) const;

    friend bool operator==(const VarRoster &, const VarRoster &) = default;

private:
    std::vector<VarGroup> groups_;
    std::vector<int> base_;
    int vars_ = 0;
    int slots_ = 0;
};

// All monomials of one multidegree: the listing (lexicographic in the
// exponent vector) plus the inverse lookup.
class MonomialIndex {
public:
    MonomialIndex() = default;
    MonomialIndex(const VarRoster &roster, const MultiDeg &deg);

    int size() const { return static_cast<int>(list_.size()); }
    const Expo &at(int i) const { return list_[i]; }
    int find(const Expo &e) const {
        auto it = index_.find(e);
        return it == index_.end() ? -1 : it->second;
    }

private:
    std::vector<Expo> list_;
    std::map<Expo, int> index_;
};

class MultiVarPoly {
public:
    using Terms = std::map<Expo, BigRational>;

    MultiVarPoly() = default;
    explicit MultiVarPoly(VarRoster roster) : roster_(std::move(roster)) {}

    // Sum over i of prod_g (group g's i-th variable)^{alpha_g}, the polarized
    // power sum. Groups with alpha_g > 0 must share one count, which is the
    // summation range.
    static MultiVarPoly polarized_power(const VarRoster &r, const MultiDeg &alpha);
    // Vandermonde determinant of one group's variables.
    static MultiVarPoly vandermonde(const VarRoster &r, int g);
    // Elementary symmetric e_k of one group's variables.
    static MultiVarPoly elementary(const VarRoster &r, int g, int k);
    static MultiVarPoly variable(const VarRoster &r, int g, int i);
    static MultiVarPoly monomial(const VarRoster &r, const Expo &e);
    static MultiVarPoly constant(const VarRoster &r, const BigRational &c);

    const VarRoster &roster() const { return roster_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Expo &e, const BigRational &c);

    MultiVarPoly &operator+=(const MultiVarPoly &o);
    friend MultiVarPoly operator*(const MultiVarPoly &a, const MultiVarPoly &b);

    // The common multidegree of all terms; throws InvalidArgument when the
    // polynomial is zero or inhomogeneous.
    MultiDeg homogeneous_degree() const;

    std::string to_string() const;

private:
    VarRoster roster_;
    Terms terms_;
};

} // namespace qth
