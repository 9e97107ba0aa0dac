#include "oracle/multivar.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qth {

VarRoster::VarRoster(std::vector<VarGroup> groups) : groups_(std::move(groups)) {
    base_.reserve(groups_.size());
    for (const VarGroup &g : groups_) {
        if (g.count < 0 || g.slot < 0)
            fail(ErrorCode::InvalidArgument, "bad variable group");
        base_.push_back(vars_);
        vars_ += g.count;
        slots_ = std::max(slots_, g.slot + 1);
    }
}

VarRoster VarRoster::xy(int n) {
    return VarRoster({{'x', n, 0}, {'y', n, 1}});
}

VarRoster VarRoster::xyab(int n, int l) {
    return VarRoster({{'x', n, 0}, {'y', n, 1}, {'a', l, 0}, {'b', l, 1}});
}

VarRoster VarRoster::sets(int n, int k) {
    static const char names[] = "xyzuvw";
    if (k < 1 || k > 6) fail(ErrorCode::InvalidArgument, "sets: k out of range");
    std::vector<VarGroup> gs;
    for (int s = 0; s < k; ++s) gs.push_back({names[s], n, s});
    return VarRoster(std::move(gs));
}

MultiDeg VarRoster::degree(const Expo &e) const {
    MultiDeg d(slots_, 0);
    for (int g = 0; g < num_groups(); ++g)
        for (int i = 0; i < groups_[g].count; ++i)
            d[groups_[g].slot] += e[base_[g] + i];
    return d;
}

namespace {

// Appends every way of spreading degree d over vars slots, continuing into
// the rest of the recursion at each leaf.
void spread(Expo &e, int base, int vars, int d,
            const std::function<void()> &leaf) {
    if (vars == 0) {
        if (d == 0) leaf();
        return;
    }
    if (vars == 1) {
        e[base] = d;
        leaf();
        e[base] = 0;
        return;
    }
    for (int first = d; first >= 0; --first) {
        e[base] = first;
        spread(e, base + 1, vars - 1, d - first, leaf);
    }
    e[base] = 0;
}

} // namespace

MonomialIndex::MonomialIndex(const VarRoster &roster, const MultiDeg &deg) {
    if (static_cast<int>(deg.size()) != roster.slots())
        fail(ErrorCode::InvalidArgument, "multidegree has wrong arity");
    // Recurse over groups; the last group of each slot takes what remains.
    Expo e(roster.vars(), 0);
    std::vector<int> last(roster.slots(), -1);
    for (int g = 0; g < roster.num_groups(); ++g) last[roster.group(g).slot] = g;

    std::function<void(int, MultiDeg &)> walk = [&](int g, MultiDeg &left) {
        if (g == roster.num_groups()) {
            list_.push_back(e);
            return;
        }
        const VarGroup &grp = roster.group(g);
        auto descend = [&] { walk(g + 1, left); };
        if (last[grp.slot] == g) {
            int d = left[grp.slot];
            if (d == 0 && grp.count == 0) {
                descend();
                return;
            }
            if (grp.count == 0) return;
            spread(e, roster.var(g, 0), grp.count, d, descend);
            return;
        }
        for (int d = left[grp.slot]; d >= 0; --d) {
            left[grp.slot] -= d;
            spread(e, roster.var(g, 0), grp.count, d, descend);
            left[grp.slot] += d;
        }
    };
    MultiDeg left = deg;
    walk(0, left);
    std::sort(list_.begin(), list_.end());
    for (int i = 0; i < static_cast<int>(list_.size()); ++i)
        index_.emplace(list_[i], i);
}

MultiVarPoly MultiVarPoly::polarized_power(const VarRoster &r,
                                           const MultiDeg &alpha) {
    if (static_cast<int>(alpha.size()) != r.num_groups())
        fail(ErrorCode::InvalidArgument, "polarized_power: alpha per group");
    int range = -1;
    for (int g = 0; g < r.num_groups(); ++g) {
        if (alpha[g] <= 0) continue;
        if (range == -1) range = r.group(g).count;
        if (r.group(g).count != range)
            fail(ErrorCode::InvalidArgument,
                 "polarized_power: groups of unequal size");
    }
    if (range == -1)
        fail(ErrorCode::InvalidArgument, "polarized_power: zero exponent");
    MultiVarPoly p(r);
    for (int i = 0; i < range; ++i) {
        Expo e(r.vars(), 0);
        for (int g = 0; g < r.num_groups(); ++g)
            if (alpha[g] > 0) e[r.var(g, i)] = alpha[g];
        p.add_term(e, BigRational(1));
    }
    return p;
}

MultiVarPoly MultiVarPoly::vandermonde(const VarRoster &r, int g) {
    int n = r.group(g).count;
    MultiVarPoly p(r);
    // Leibniz sum: sum over permutations w of sgn(w) prod_i v_i^{w(i)}.
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inv += w[i] > w[j];
        Expo e(r.vars(), 0);
        for (int i = 0; i < n; ++i) e[r.var(g, i)] = w[i];
        p.add_term(e, BigRational(inv % 2 ? -1 : 1));
    } while (std::next_permutation(w.begin(), w.end()));
    return p;
}

MultiVarPoly MultiVarPoly::elementary(const VarRoster &r, int g, int k) {
    int n = r.group(g).count;
    if (k < 0 || k > n) fail(ErrorCode::InvalidArgument, "elementary: bad k");
    MultiVarPoly p(r);
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        Expo e(r.vars(), 0);
        for (int i : pick) e[r.var(g, i)] = 1;
        p.add_term(e, BigRational(1));
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return p;
}

MultiVarPoly MultiVarPoly::variable(const VarRoster &r, int g, int i) {
    MultiVarPoly p(r);
    Expo e(r.vars(), 0);
    e[r.var(g, i)] = 1;
    p.add_term(e, BigRational(1));
    return p;
}

MultiVarPoly MultiVarPoly::monomial(const VarRoster &r, const Expo &e) {
    if (static_cast<int>(e.size()) != r.vars())
        fail(ErrorCode::InvalidArgument, "monomial: exponent length mismatch");
    MultiVarPoly p(r);
    p.add_term(e, BigRational(1));
    return p;
}

MultiVarPoly MultiVarPoly::constant(const VarRoster &r, const BigRational &c) {
    MultiVarPoly p(r);
    p.add_term(Expo(r.vars(), 0), c);
    return p;
}

void MultiVarPoly::add_term(const Expo &e, const BigRational &c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

MultiVarPoly &MultiVarPoly::operator+=(const MultiVarPoly &o) {
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiVarPoly operator*(const MultiVarPoly &a, const MultiVarPoly &b) {
    MultiVarPoly p(a.roster());
    Expo e(a.roster().vars());
    for (const auto &[ea, ca] : a.terms())
        for (const auto &[eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            BigRational c = ca * cb;
            p.add_term(e, c);
        }
    return p;
}

MultiDeg MultiVarPoly::homogeneous_degree() const {
    if (terms_.empty())
        fail(ErrorCode::InvalidArgument, "degree of the zero polynomial");
    MultiDeg d = roster_.degree(terms_.begin()->first);
    for (const auto &[e, c] : terms_)
        if (roster_.degree(e) != d)
            fail(ErrorCode::InvalidArgument, "polynomial is not homogeneous");
    return d;
}

std::string MultiVarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto &[e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += qth::to_string(c);
        for (int g = 0; g < roster_.num_groups(); ++g)
            for (int i = 0; i < roster_.group(g).count; ++i) {
                int x = e[roster_.var(g, i)];
                if (x == 0) continue;
                out += ' ';
                out += roster_.group(g).name;
                out += std::to_string(i + 1);
                if (x > 1) out += '^' + std::to_string(x);
            }
    }
    return out;
}

} // namespace qth
