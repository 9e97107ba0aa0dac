#include "oracle/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace qth {

namespace {

// One permutation per cycle type, cycles laid out consecutively; traces are
// class functions, so the representative does not matter.
std::vector<int> perm_of_type(const Partition &rho, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    int pos = 0;
    for (int part : rho.parts()) {
        for (int j = 0; j < part; ++j) p[pos + j] = pos + (j + 1) % part;
        pos += part;
    }
    return p;
}

int perm_sign(const Partition &rho) {
    int n = 0;
    for (int part : rho.parts()) n += part;
    return (n - rho.num_parts()) % 2 == 0 ? 1 : -1;
}

BigInt require_integer(const BigRational &v, const char *what) {
    if (v.get_den() != 1) fail(ErrorCode::IntegralityViolation, what);
    return v.get_num();
}

long long require_ll(const BigInt &v) {
    if (!v.fits_slong_p())
        fail(ErrorCode::Internal, "oracle: cleared row entry overflows");
    return v.get_si();
}

// Scales a rational vector to coprime integers; returns the sparse form.
SparseRow cleared_row(const std::vector<BigRational> &v) {
    BigInt den = 1;
    for (const BigRational &c : v)
        if (sgn(c) != 0)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                    c.get_den().get_mpz_t());
    std::vector<BigInt> num(v.size());
    BigInt content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        num[i] = BigInt(v[i].get_num() * (den / v[i].get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                num[i].get_mpz_t());
    }
    SparseRow row;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(num[i]) != 0)
            row.terms.emplace_back(static_cast<int>(i),
                                   require_ll(BigInt(num[i] / content)));
    return row;
}

// All one-set data for n variables: per degree, the monomial listing, the
// row space of the ideal piece generated by p_1..p_n, and the reduction of
// every monomial onto the surviving (free) monomials.
class OneSetTable {
public:
    explicit OneSetTable(int n) : n_(n), ros_(VarRoster::sets(n, 1)) {}

    int n() const { return n_; }

    const MonomialIndex &monos(int d) { return level(d).idx; }
    const RowSpace &space(int d) { return level(d).rs; }
    int h(int d) { return space(d).nullity(); }

    const std::vector<BigRational> &red(int d, int mi) {
        return level(d).red[mi];
    }

    int permuted(int d, int mi, const std::vector<int> &perm) {
        Level &lv = level(d);
        const Expo &e = lv.idx.at(mi);
        Expo e2(n_, 0);
        for (int i = 0; i < n_; ++i) e2[perm[i]] = e[i];
        return lv.idx.find(e2);
    }

    // Trace of the permutation action on the one-set coinvariant piece.
    BigRational trace(int d, const std::vector<int> &perm) {
        Level &lv = level(d);
        BigRational tr(0);
        const auto &free = lv.rs.free_cols();
        for (int f = 0; f < static_cast<int>(free.size()); ++f)
            tr += lv.red[permuted(d, free[f], perm)][f];
        return tr;
    }

private:
    struct Level {
        MonomialIndex idx;
        RowSpace rs;
        std::vector<std::vector<BigRational>> red;
    };

    Level &level(int d) {
        auto it = levels_.find(d);
        if (it != levels_.end()) return it->second;
        Level lv;
        lv.idx = MonomialIndex(ros_, {d});
        std::vector<SparseRow> rows;
        for (int u = 1; u <= n_ && u <= d; ++u) {
            MonomialIndex mul(ros_, {d - u});
            for (int mi = 0; mi < mul.size(); ++mi) {
                SparseRow row;
                for (int i = 0; i < n_; ++i) {
                    Expo e = mul.at(mi);
                    e[i] += u;
                    row.terms.emplace_back(lv.idx.find(e), 1);
                }
                std::sort(row.terms.begin(), row.terms.end());
                rows.push_back(std::move(row));
            }
        }
        lv.rs = row_space(rows, lv.idx.size(), true);
        lv.red.resize(lv.idx.size());
        const int h = lv.rs.nullity();
        for (int c = 0; c < lv.idx.size(); ++c) {
            std::vector<BigRational> v(h, BigRational(0));
            int ps = lv.rs.pivot_slot(c);
            if (ps >= 0) {
                for (int f = 0; f < h; ++f) v[f] = -lv.rs.tails()[ps][f];
            } else {
                v[lv.rs.free_slot(c)] = 1;
            }
            lv.red[c] = std::move(v);
        }
        return levels_.emplace(d, std::move(lv)).first->second;
    }

    int n_;
    VarRoster ros_;
    std::map<int, Level> levels_;
};

// Cell-by-cell quotients for k sets of n variables, in the compressed basis:
// free one-set monomials per slot, tensored, with only the mixed generators
// (polarized power sums touching at least two slots) eliminated explicitly.
class ProjectedCells {
public:
    ProjectedCells(int n, int k) : n_(n), k_(k), table_(n) {
        MultiDeg alpha(k, 0);
        std::function<void(int, int, int)> walk = [&](int j, int left,
                                                      int nonzero) {
            if (j == k) {
                if (nonzero >= 2) mixed_.push_back(alpha);
                return;
            }
            for (int a = 0; a <= left; ++a) {
                alpha[j] = a;
                walk(j + 1, left - a, nonzero + (a > 0));
            }
            alpha[j] = 0;
        };
        walk(0, n, 0);
        std::sort(mixed_.begin(), mixed_.end());
    }

    OneSetTable &table() { return table_; }

    struct Cell {
        std::vector<int> hs;
        long long space = 0; // product of hs
        int dim = 0;
        bool kept = false;
        RowSpace rs;
        std::vector<std::vector<int>> pivdec; // pivot column per-slot indices
    };

    Cell cell(const MultiDeg &deg, bool keep) {
        Cell c;
        c.hs.resize(k_);
        c.space = 1;
        for (int j = 0; j < k_; ++j) {
            c.hs[j] = table_.h(deg[j]);
            c.space *= c.hs[j];
        }
        if (c.space == 0) return c;
        const int D = static_cast<int>(c.space);

        std::vector<SparseRow> rows;
        std::vector<BigRational> acc(D);
        for (const MultiDeg &alpha : mixed_) {
            bool fits = true;
            for (int j = 0; j < k_; ++j) fits = fits && alpha[j] <= deg[j];
            if (!fits) continue;
            // odometer over tuples of multiplier monomials, one per slot
            std::vector<int> sizes(k_), tuple(k_, 0);
            for (int j = 0; j < k_; ++j)
                sizes[j] = table_.monos(deg[j] - alpha[j]).size();
            for (;;) {
                build_row(deg, alpha, tuple, &acc);
                bool zero = true;
                for (const BigRational &x : acc) zero = zero && sgn(x) == 0;
                if (!zero) rows.push_back(cleared_row(acc));
                int j = k_ - 1;
                while (j >= 0 && ++tuple[j] == sizes[j]) tuple[j--] = 0;
                if (j < 0) break;
            }
        }
        c.rs = row_space(rows, D, keep);
        c.dim = c.rs.nullity();
        c.kept = keep;
        if (keep) {
            c.pivdec.resize(c.rs.rank());
            for (int i = 0; i < c.rs.rank(); ++i) {
                int col = c.rs.pivot_cols()[i];
                std::vector<int> dec(k_);
                for (int j = k_ - 1; j >= 0; --j) {
                    dec[j] = col % c.hs[j];
                    col /= c.hs[j];
                }
                c.pivdec[i] = std::move(dec);
            }
        }
        return c;
    }

    // Trace of the diagonal permutation action on the cell's quotient.
    BigRational cell_trace(const Cell &c, const MultiDeg &deg,
                           const std::vector<int> &perm) {
        BigRational prod(1);
        for (int j = 0; j < k_; ++j) prod *= table_.trace(deg[j], perm);
        if (c.space == 0 || c.rs.rank() == 0) return prod;
        if (!c.kept) fail(ErrorCode::Internal, "cell_trace without row space");

        // Subtract the trace on the image of the mixed relations, read off
        // against the reduced basis: the coefficient of a span member at a
        // pivot column is just its entry there.
        const int D = static_cast<int>(c.space);
        const int rank = c.rs.rank();
        BigRational mixed(0);
        std::vector<const std::vector<BigRational> *> vjs(k_);
        std::vector<int> dec(k_);
        for (int col = 0; col < D; ++col) {
            int rest = col;
            for (int j = k_ - 1; j >= 0; --j) {
                dec[j] = rest % c.hs[j];
                rest /= c.hs[j];
            }
            for (int j = 0; j < k_; ++j) {
                int fc = table_.space(deg[j]).free_cols()[dec[j]];
                vjs[j] = &table_.red(deg[j],
                                     table_.permuted(deg[j], fc, perm));
            }
            int ps = c.rs.pivot_slot(col);
            if (ps >= 0) {
                BigRational val(1);
                for (int j = 0; j < k_; ++j) val *= (*vjs[j])[c.pivdec[ps][j]];
                mixed += val;
                continue;
            }
            const int fs = c.rs.free_slot(col);
            for (int i = 0; i < rank; ++i) {
                const BigRational &t = c.rs.tails()[i][fs];
                if (sgn(t) == 0) continue;
                BigRational val = t;
                for (int j = 0; j < k_; ++j) val *= (*vjs[j])[c.pivdec[i][j]];
                mixed += val;
            }
        }
        return prod - mixed;
    }

    // Membership of the polarized power sum p_alpha in the ideal piece at
    // its own multidegree.
    bool generator_absorbed(const MultiDeg &alpha) {
        Cell c = cell(alpha, true);
        if (c.space == 0) return true;
        std::vector<BigRational> acc(c.space);
        build_row(alpha, alpha, std::vector<int>(k_, 0), &acc);
        bool zero = true;
        for (const BigRational &x : acc) zero = zero && sgn(x) == 0;
        if (zero) return true;
        return c.rs.contains(cleared_row(acc));
    }

private:
    // acc <- the projected row of (prod_j multiplier m_j) * p_alpha.
    void build_row(const MultiDeg &deg, const MultiDeg &alpha,
                   const std::vector<int> &tuple,
                   std::vector<BigRational> *acc) {
        std::fill(acc->begin(), acc->end(), BigRational(0));
        std::vector<const std::vector<BigRational> *> vjs(k_);
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < k_; ++j) {
                const MonomialIndex &mul = table_.monos(deg[j] - alpha[j]);
                Expo e = mul.at(tuple[j]);
                e[i] += alpha[j];
                vjs[j] = &table_.red(deg[j], table_.monos(deg[j]).find(e));
            }
            std::function<void(int, int, const BigRational &)> rec =
                [&](int j, int off, const BigRational &cpart) {
                    if (j == k_) {
                        (*acc)[off] += cpart;
                        return;
                    }
                    const std::vector<BigRational> &vj = *vjs[j];
                    for (int a = 0; a < static_cast<int>(vj.size()); ++a) {
                        if (sgn(vj[a]) == 0) continue;
                        rec(j + 1, off * static_cast<int>(vj.size()) + a,
                            BigRational(cpart * vj[a]));
                    }
                };
            rec(0, 0, BigRational(1));
        }
    }

    int n_, k_;
    OneSetTable table_;
    std::vector<MultiDeg> mixed_;
};

BigRational rational_of(const QtFraction &f, const char *what) {
    if (!f.is_laurent_polynomial())
        fail(ErrorCode::Internal, what);
    const QtLaurent &num = f.num();
    BigRational c = num.coeff(0, 0);
    QtLaurent rest = num;
    rest.add_term(0, 0, -c);
    if (!rest.is_zero()) fail(ErrorCode::Internal, what);
    return c;
}

// Character of the symmetric group: coefficient of s_nu in p_rho.
BigInt symchar(const Partition &nu, const Partition &rho) {
    return require_integer(
        rational_of(SymFunc::power(rho).schur_coeff(nu), "symchar"),
        "symchar: character not integral");
}

} // namespace

int BigradedModule::dim(int r, int s) const {
    auto it = dims.find({r, s});
    return it == dims.end() ? 0 : it->second;
}

BigInt BigradedModule::total_dim() const {
    BigInt t = 0;
    for (const auto &[rs, d] : dims) t += d;
    return t;
}

QtLaurent BigradedModule::hilbert() const {
    QtLaurent h;
    for (const auto &[rs, d] : dims)
        h.add_term(rs.second, rs.first, BigRational(d));
    return h;
}

SymFunc BigradedModule::frobenius() const {
    if (!has_traces)
        fail(ErrorCode::InvalidArgument, "frobenius: traces not computed");
    SymFunc::Coeffs pc;
    for (const CycleType &ct : cycle_types(n)) {
        auto it = traces.find(ct.lambda);
        if (it == traces.end()) continue;
        QtLaurent gen;
        for (const auto &[rs, tr] : it->second)
            gen.add_term(rs.second, rs.first, BigRational(tr));
        if (gen.is_zero()) continue;
        pc[ct.lambda] = QtFraction::from_laurent(gen) *
                        QtFraction(BigRational(1) / BigRational(ct.z));
    }
    SymFunc f = SymFunc::from_basis(n, pc, SymBasis::Power);
    for (const auto &[lambda, c] : f.coeffs()) {
        if (!c.is_laurent_polynomial() ||
            !c.num().has_nonneg_integer_coeffs())
            fail(ErrorCode::PositivityViolation,
                 "frobenius: Schur coefficient of " + lambda.to_string() +
                     " is not in N[q,t]");
    }
    return f;
}

BigradedModule coinvariant_module(int n, const OracleOptions &opt) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "coinvariant_module: n < 1");
    if (n > 5)
        fail(ErrorCode::ResourceBound, "coinvariant_module: n > 5");
    const int B = n * (n - 1) / 2;
    const bool want_traces =
        n <= opt.trace_max_n || (n == 5 && opt.extended);

    BigradedModule mod;
    mod.n = n;
    mod.has_traces = want_traces;

    ProjectedCells engine(n, 2);
    std::vector<CycleType> types = cycle_types(n);
    std::vector<std::vector<int>> perms;
    for (const CycleType &ct : types)
        perms.push_back(perm_of_type(ct.lambda, n));

    auto getdim = [&](int r, int s) { return mod.dim(r, s); };

    for (int total = 0; total <= 2 * B; ++total) {
        for (int r = std::max(0, total - B); 2 * r <= total; ++r) {
            const int s = total - r;
            if (s > B) continue;
            // A quotient algebra generated in degree one dies at (r,s) as
            // soon as both lower neighbours are dead.
            if (total > 0 && (r == 0 || getdim(r - 1, s) == 0) &&
                (s == 0 || getdim(r, s - 1) == 0))
                continue;
            ProjectedCells::Cell c = engine.cell({r, s}, want_traces);
            if (c.dim == 0) continue;
            if (total > B)
                fail(ErrorCode::IdentityFails,
                     "coinvariant_module: nonzero cell (" +
                         std::to_string(r) + "," + std::to_string(s) +
                         ") beyond total degree " + std::to_string(B) +
                         ", dim " + std::to_string(c.dim));
            mod.dims[{r, s}] = c.dim;
            mod.dims[{s, r}] = c.dim;
            if (want_traces) {
                for (std::size_t ti = 0; ti < types.size(); ++ti) {
                    BigRational tr =
                        engine.cell_trace(c, {r, s}, perms[ti]);
                    BigInt v = require_integer(
                        tr, "coinvariant_module: trace not integral");
                    if (types[ti].lambda.num_parts() == n && v != c.dim)
                        fail(ErrorCode::Internal,
                             "coinvariant_module: identity trace mismatch");
                    if (sgn(v) != 0) {
                        mod.traces[types[ti].lambda][{r, s}] = v;
                        mod.traces[types[ti].lambda][{s, r}] = v;
                    }
                }
            }
        }
    }

    // The generators one degree past the defining range must already lie in
    // the ideal; by the ideal property everything above then follows.
    for (int u = 0; 2 * u <= n + 1; ++u)
        if (!engine.generator_absorbed({u, n + 1 - u}))
            fail(ErrorCode::IdentityFails,
                 "coinvariant_module: p_{" + std::to_string(u) + "," +
                     std::to_string(n + 1 - u) + "} not absorbed");
    return mod;
}

namespace {

BigradedModule harmonics_by_kernel(int n) {
    const int B = n * (n - 1) / 2;
    VarRoster ros = VarRoster::xy(n);
    BigradedModule mod;
    mod.n = n;
    for (int total = 0; total <= B; ++total)
        for (int r = 0; 2 * r <= total; ++r) {
            const int s = total - r;
            MonomialIndex src(ros, {r, s});
            std::map<std::pair<std::pair<int, int>, int>,
                     std::map<int, long long>>
                sink; // (generator, target monomial) -> row
            std::vector<MonomialIndex> tgts;
            std::map<std::pair<int, int>, int> tgt_of;
            for (int u = 0; u <= std::min(n, r); ++u)
                for (int v = (u == 0 ? 1 : 0); u + v <= n && v <= s; ++v) {
                    tgt_of[{u, v}] = static_cast<int>(tgts.size());
                    tgts.emplace_back(ros, MultiDeg{r - u, s - v});
                }
            for (int mi = 0; mi < src.size(); ++mi) {
                const Expo &e = src.at(mi);
                for (const auto &[uv, ti] : tgt_of) {
                    const auto [u, v] = uv;
                    for (int i = 0; i < n; ++i) {
                        if (e[i] < u || e[n + i] < v) continue;
                        Expo e2 = e;
                        e2[i] -= u;
                        e2[n + i] -= v;
                        long long coeff = 1;
                        for (int j = 0; j < u; ++j) coeff *= e[i] - j;
                        for (int j = 0; j < v; ++j) coeff *= e[n + i] - j;
                        sink[{uv, tgts[ti].find(e2)}][mi] += coeff;
                    }
                }
            }
            std::vector<SparseRow> rows;
            for (const auto &[key, entries] : sink) {
                SparseRow row;
                for (const auto &[col, coeff] : entries)
                    if (coeff != 0) row.terms.emplace_back(col, coeff);
                if (!row.terms.empty()) rows.push_back(std::move(row));
            }
            int d = src.size() - exact_rank(rows, src.size());
            if (d != 0) {
                mod.dims[{r, s}] = d;
                mod.dims[{s, r}] = d;
            }
        }
    return mod;
}

} // namespace

BigradedModule harmonics_module(int n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "harmonics_module: n < 1");
    if (n <= 4) return harmonics_by_kernel(n);
    // Same dimensions as the ideal-side quotient: the pairing taking p, q to
    // the constant term of p(d/dx, d/dy) q is diagonal on monomials with
    // nonzero (factorial) entries, so the kernel of the stacked operators
    // has exactly the codimension of the ideal piece.
    OracleOptions opt;
    opt.trace_max_n = 0;
    BigradedModule mod = coinvariant_module(n, opt);
    mod.has_traces = false;
    mod.traces.clear();
    return mod;
}

std::map<std::pair<int, int>, std::vector<MultiVarPoly>>
harmonics_basis(int n) {
    if (n < 1 || n > 4)
        fail(ErrorCode::ResourceBound, "harmonics_basis: need 1 <= n <= 4");
    const int B = n * (n - 1) / 2;
    VarRoster ros = VarRoster::xy(n);
    std::map<std::pair<int, int>, std::vector<MultiVarPoly>> out;
    for (int total = 0; total <= B; ++total)
        for (int r = 0; r <= total; ++r) {
            const int s = total - r;
            MonomialIndex src(ros, {r, s});
            std::vector<SparseRow> rows;
            for (int u = 0; u <= std::min(n, r); ++u)
                for (int v = (u == 0 ? 1 : 0); u + v <= n && v <= s; ++v) {
                    MonomialIndex tgt(ros, {r - u, s - v});
                    std::map<int, std::map<int, long long>> sink;
                    for (int mi = 0; mi < src.size(); ++mi) {
                        const Expo &e = src.at(mi);
                        for (int i = 0; i < n; ++i) {
                            if (e[i] < u || e[n + i] < v) continue;
                            Expo e2 = e;
                            e2[i] -= u;
                            e2[n + i] -= v;
                            long long coeff = 1;
                            for (int j = 0; j < u; ++j) coeff *= e[i] - j;
                            for (int j = 0; j < v; ++j) coeff *= e[n + i] - j;
                            sink[tgt.find(e2)][mi] += coeff;
                        }
                    }
                    for (const auto &[t, entries] : sink) {
                        SparseRow row;
                        for (const auto &[col, coeff] : entries)
                            if (coeff != 0) row.terms.emplace_back(col, coeff);
                        if (!row.terms.empty())
                            rows.push_back(std::move(row));
                    }
                }
            RowSpace rs = row_space(rows, src.size(), true);
            if (rs.nullity() == 0) continue;
            std::vector<MultiVarPoly> basis;
            for (int f = 0; f < rs.nullity(); ++f) {
                std::vector<BigRational> v = rs.kernel_vector(f);
                MultiVarPoly p(ros);
                for (int c = 0; c < src.size(); ++c)
                    if (sgn(v[c]) != 0) p.add_term(src.at(c), v[c]);
                basis.push_back(std::move(p));
            }
            out.emplace(std::make_pair(r, s), std::move(basis));
        }
    return out;
}

namespace {

MultiVarPoly apply_dx(const MultiVarPoly &p, int i) {
    MultiVarPoly out(p.roster());
    for (const auto &[e, c] : p.terms()) {
        if (e[i] == 0) continue;
        Expo e2 = e;
        e2[i] -= 1;
        out.add_term(e2, BigRational(c * e[i]));
    }
    return out;
}

// E_k = sum_i y_i (d/dx_i)^k.
MultiVarPoly apply_polarize(const MultiVarPoly &p, int n, int k) {
    MultiVarPoly out(p.roster());
    for (const auto &[e, c] : p.terms())
        for (int i = 0; i < n; ++i) {
            if (e[i] < k) continue;
            long long coeff = 1;
            for (int j = 0; j < k; ++j) coeff *= e[i] - j;
            Expo e2 = e;
            e2[i] -= k;
            e2[n + i] += 1;
            out.add_term(e2, BigRational(c * BigRational(coeff)));
        }
    return out;
}

} // namespace

OperatorSpanReport operator_span(int n, const BigradedModule &reference) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "operator_span: n < 1");
    VarRoster ros = VarRoster::xy(n);

    struct CellEch {
        MonomialIndex idx;
        std::map<int, std::map<int, BigRational>> rows; // leading col -> row
    };
    std::map<std::pair<int, int>, CellEch> cells;

    auto insert = [&](const MultiVarPoly &p) -> bool {
        MultiDeg deg = p.homogeneous_degree();
        auto key = std::make_pair(deg[0], deg[1]);
        auto it = cells.find(key);
        if (it == cells.end()) {
            it = cells.emplace(key, CellEch()).first;
            it->second.idx = MonomialIndex(ros, deg);
        }
        CellEch &ce = it->second;
        std::map<int, BigRational> v;
        for (const auto &[e, c] : p.terms()) v[ce.idx.find(e)] = c;
        while (!v.empty()) {
            auto lead = v.begin();
            auto row = ce.rows.find(lead->first);
            if (row == ce.rows.end()) break;
            BigRational factor = lead->second;
            for (const auto &[col, rc] : row->second) {
                auto [vit, fresh] = v.emplace(col, BigRational(0));
                vit->second -= factor * rc;
                if (sgn(vit->second) == 0) v.erase(vit);
            }
        }
        if (v.empty()) return false;
        BigRational lead = v.begin()->second;
        for (auto &[col, c] : v) c /= lead;
        ce.rows.emplace(v.begin()->first, std::move(v));
        return true;
    };

    std::deque<MultiVarPoly> work;
    MultiVarPoly delta = MultiVarPoly::vandermonde(ros, 0);
    insert(delta);
    work.push_back(std::move(delta));
    while (!work.empty()) {
        MultiVarPoly p = std::move(work.front());
        work.pop_front();
        auto consider = [&](MultiVarPoly q) {
            if (!q.is_zero() && insert(q)) work.push_back(std::move(q));
        };
        for (int i = 0; i < n; ++i) consider(apply_dx(p, i));
        for (int k = 1; k < n; ++k) consider(apply_polarize(p, n, k));
    }

    OperatorSpanReport rep;
    rep.n = n;
    for (const auto &[key, ce] : cells)
        if (!ce.rows.empty())
            rep.dims[key] = static_cast<int>(ce.rows.size());
    rep.verified = true;
    std::map<std::pair<int, int>, int> all = rep.dims;
    for (const auto &[key, d] : reference.dims) all.emplace(key, 0);
    for (const auto &[key, d] : all) {
        auto mine = rep.dims.find(key);
        int have = mine == rep.dims.end() ? 0 : mine->second;
        if (have != reference.dim(key.first, key.second)) {
            rep.verified = false;
            rep.mismatch = key;
            break;
        }
    }
    return rep;
}

bool op_criterion(const MultiVarPoly &p) {
    const VarRoster &ros = p.roster();
    if (ros.num_groups() != 2 || ros.group(0).name != 'x' ||
        ros.group(1).name != 'y' ||
        ros.group(0).count != ros.group(1).count)
        fail(ErrorCode::InvalidArgument, "op_criterion: expected an xy roster");
    const int n = ros.group(0).count;
    if (p.is_zero()) return true;
    MultiDeg deg = p.homogeneous_degree(); // also validates bihomogeneity

    // Substitute y_j -> sum_k lambda_k x_j^k and collect coefficients of
    // each lambda-monomial; every one of them must lie in the ideal
    // (e_1..e_n) = (p_1..p_n) of its own x-degree.
    std::map<std::vector<int>, std::map<Expo, BigRational>> pieces;
    for (const auto &[e, c] : p.terms()) {
        std::vector<int> lam(std::max(n - 1, 0), 0);
        Expo xe(n, 0);
        for (int i = 0; i < n; ++i) xe[i] = e[i];
        std::function<void(int, const BigRational &)> expand =
            [&](int j, const BigRational &coeff) {
                if (j == n) {
                    pieces[lam][xe] += coeff;
                    return;
                }
                const int m = e[n + j];
                if (m == 0) {
                    expand(j + 1, coeff);
                    return;
                }
                if (n == 1) return; // empty substitution target: y_j -> 0
                std::vector<int> comp(n - 1, 0);
                std::function<void(int, int)> parts = [&](int k, int left) {
                    if (k == n - 2) {
                        comp[k] = left;
                        BigInt mult = factorial(m);
                        for (int z : comp) mult /= factorial(z);
                        int xshift = 0;
                        for (int kk = 0; kk < n - 1; ++kk)
                            xshift += (kk + 1) * comp[kk];
                        for (int kk = 0; kk < n - 1; ++kk)
                            lam[kk] += comp[kk];
                        xe[j] += xshift;
                        expand(j + 1, BigRational(coeff * BigRational(mult)));
                        xe[j] -= xshift;
                        for (int kk = 0; kk < n - 1; ++kk)
                            lam[kk] -= comp[kk];
                        return;
                    }
                    for (int take = 0; take <= left; ++take) {
                        comp[k] = take;
                        parts(k + 1, left - take);
                    }
                };
                parts(0, m);
            };
        expand(0, c);
    }

    OneSetTable table(n);
    for (const auto &[lam, poly] : pieces) {
        int d = -1;
        std::vector<BigRational> dense;
        for (const auto &[xe, c] : poly) {
            if (sgn(c) == 0) continue;
            int dm = std::accumulate(xe.begin(), xe.end(), 0);
            if (d == -1) {
                d = dm;
                if (d > 40 || table.monos(d).size() > 20000)
                    fail(ErrorCode::ResourceBound,
                         "op_criterion: substituted degree too large");
                dense.assign(table.monos(d).size(), BigRational(0));
            }
            dense[table.monos(d).find(xe)] = c;
        }
        if (d == -1) continue;
        if (!table.space(d).contains(cleared_row(dense))) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<int>> component_maps(int n, int l) {
    std::vector<std::vector<int>> comps;
    std::vector<int> f(l, 0);
    for (;;) {
        comps.push_back(f);
        int j = l - 1;
        while (j >= 0 && ++f[j] == n) f[j--] = 0;
        if (j < 0) break;
    }
    return comps;
}

int encode_map(const std::vector<int> &f, int n) {
    int code = 0;
    for (int d : f) code = code * n + d;
    return code;
}

// Evaluation of an xyab monomial on one component: a_i -> x_{f(i)},
// b_i -> y_{f(i)}. Returns the xy exponent vector.
Expo eval_monomial(const Expo &e, int n, int l, const std::vector<int> &f) {
    Expo t(2 * n, 0);
    for (int i = 0; i < n; ++i) {
        t[i] = e[i];
        t[n + i] = e[2 * n + ... 0];
    }
    return t;
}

} // namespace

} // namespace qth
