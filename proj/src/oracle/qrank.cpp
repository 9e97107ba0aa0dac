#include "oracle/qrank.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <string>

namespace qth {

namespace {

// All modular work uses primes just below 2^24. Residues are kept centered
// (|v| <= p/2 < 2^23), so stored rows fit exactly in floats, any product of
// two residues stays below 2^46, and a double accumulator holds at least 96
// fused multiply-adds exactly before it needs renormalizing: every quantity
// in play is an integer of magnitude < 2^53, where double arithmetic is
// exact. Rounding in nearbyint never threatens correctness; it only picks
// which multiple of p gets subtracted, and a one-off is repaired on the spot.
constexpr int kRenormEvery = 96;
constexpr int kMaxPrimes = 96;

bool small_prime(std::uint32_t v) {
    if (v % 2 == 0) return v == 2;
    for (std::uint32_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

const std::vector<double> &prime_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t;
        for (std::uint32_t v = (1u << 24) - 1; t.size() < kMaxPrimes; --v)
            if (small_prime(v)) t.push_back(static_cast<double>(v));
        return t;
    }();
    return table;
}

long long inverse_mod(long long a, long long p) {
    long long r0 = p, r1 = ((a % p) + p) % p, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) fail(ErrorCode::Internal, "inverse_mod: not a unit");
    return ((s0 % p) + p) % p;
}

// One echelon basis modulo one prime. Rows are stored trimmed from their
// pivot column, normalized to leading 1, centered, as floats.
struct ModElim {
    double p = 0, pinv = 0, half = 0;
    int cols = 0;
    bool alive = true;
    std::vector<float> arena;
    std::vector<std::size_t> off; // per pivot slot
    std::vector<int> pivcol;      // per pivot slot

    void init(double prime, int c, bool reserve_big) {
        p = prime;
        pinv = 1.0 / prime;
        half = prime / 2;
        cols = c;
        if (reserve_big)
            arena.reserve(static_cast<std::size_t>(c) * c / 2 + 4 * c);
    }

    double centered(double x) const {
        double r = x - std::nearbyint(x * pinv) * p;
        if (r > half) r -= p;
        if (r < -half) r += p;
        return r + 0.0; // flush -0
    }

    void renorm(double *buf, int lo, int hi) const {
        for (int j = lo; j < hi; ++j)
            buf[j] -= std::nearbyint(buf[j] * pinv) * p;
    }

    void load(const SparseRow &row, double *buf) const {
        std::memset(buf, 0, sizeof(double) * cols);
        const long long lp = static_cast<long long>(p);
        for (const auto &[c, v] : row.terms) {
            long long r = v % lp;
            buf[c] = centered(static_cast<double>(r));
        }
    }

    // Eliminates buf against the stored rows; on a fresh pivot column the
    // normalized row is appended and the column is returned, otherwise -1.
    // Columns whose shared slot is >= slot_limit are treated as pivotless,
    // which lets a late-joining prime replay the pivot rows chronologically.
    int absorb(double *buf, const std::vector<int> &slot_of_col,
               int slot_limit) {
        int since = 0;
        for (int c = 0; c < cols; ++c) {
            double m = centered(buf[c]);
            buf[c] = 0.0;
            if (m == 0.0) continue;
            int slot = slot_of_col[c];
            if (slot < 0 || slot >= slot_limit) {
                append_row(buf, c, m);
                return c;
            }
            const float *row = &arena[off[slot]];
            const int len = cols - c;
            double *b = buf + c;
            for (int j = 1; j < len; ++j)
                b[j] -= m * static_cast<double>(row[j]);
            if (++since >= kRenormEvery) {
                renorm(buf, c + 1, cols);
                since = 0;
            }
        }
        return -1;
    }

    void append_row(const double *buf, int c, double lead) {
        const double inv =
            static_cast<double>(inverse_mod(static_cast<long long>(lead),
                                            static_cast<long long>(p)));
        off.push_back(arena.size());
        pivcol.push_back(c);
        arena.push_back(1.0f);
        for (int j = c + 1; j < cols; ++j) {
            double v = centered(buf[j]);
            arena.push_back(static_cast<float>(centered(v * inv)));
        }
    }

    // Reduced tails on the free columns for every pivot slot, via one batched
    // back-substitution (descending pivot columns). T is slot-major.
    void backsolve(const std::vector<int> &free_cols,
                   std::vector<double> *T) const {
        const int r = static_cast<int>(pivcol.size());
        const int k = static_cast<int>(free_cols.size());
        T->assign(static_cast<std::size_t>(r) * k, 0.0);
        std::vector<int> by_col(r);
        std::iota(by_col.begin(), by_col.end(), 0);
        std::sort(by_col.begin(), by_col.end(),
                  [&](int a, int b) { return pivcol[a] < pivcol[b]; });
        std::vector<double> acc(k);
        for (int oi = r - 1; oi >= 0; --oi) {
            const int i = by_col[oi];
            const int pc = pivcol[i];
            const float *row = &arena[off[i]];
            for (int f = 0; f < k; ++f)
                acc[f] = free_cols[f] > pc
                             ? static_cast<double>(row[free_cols[f] - pc])
                             : 0.0;
            int since = 0;
            for (int oj = oi + 1; oj < r; ++oj) {
                const int j = by_col[oj];
                const double g = static_cast<double>(row[pivcol[j] - pc]);
                if (g == 0.0) continue;
                const double *tj = T->data() + static_cast<std::size_t>(j) * k;
                for (int f = 0; f < k; ++f) acc[f] -= g * tj[f];
                if (++since >= kRenormEvery) {
                    for (int f = 0; f < k; ++f)
                        acc[f] -= std::nearbyint(acc[f] * pinv) * p;
                    since = 0;
                }
            }
            double *ti = T->data() + static_cast<std::size_t>(i) * k;
            for (int f = 0; f < k; ++f) ti[f] = centered(acc[f]);
        }
    }
};

// Rational reconstruction of a centered residue a mod M with numerator and
// denominator below sqrt(M/2); returns false when no candidate exists.
bool rat_reconstruct(const BigInt &a, const BigInt &m, BigRational *out) {
    BigInt bound;
    mpz_sqrt(bound.get_mpz_t(), BigInt(m / 2).get_mpz_t());
    BigInt r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
    while (r1 > bound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (sgn(s1) == 0) return false;
    BigInt num = r1, den = s1;
    if (sgn(den) < 0) {
        num = -num;
        den = -den;
    }
    if (den > bound) return false;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return false;
    *out = BigRational(num) / BigRational(den);
    return true;
}

struct Driver {
    const std::vector<SparseRow> &rows;
    const int cols;
    const bool want_tails;
    const bool big;

    std::vector<ModElim> elims;
    std::vector<int> slot_of_col;   // col -> pivot slot, shared by all elims
    std::vector<int> pivcols;       // per slot: pivot column
    std::vector<int> pivot_origin;  // per slot: input row index
    std::vector<char> processed;
    int processed_count = 0;
    int rank = 0;
    int prime_cursor = 0; // primes are never reused within one call

    Driver(const std::vector<SparseRow> &rows, int cols, bool want_tails)
        : rows(rows), cols(cols), want_tails(want_tails), big(cols > 4096) {}

    void start(int nprimes) {
        elims.clear();
        for (int i = 0; i < nprimes; ++i) {
            elims.emplace_back();
            elims.back().init(next_prime(), cols, big);
        }
        slot_of_col.assign(cols, -1);
        pivcols.clear();
        pivot_origin.clear();
        processed.assign(rows.size(), 0);
        processed_count = 0;
        rank = 0;
    }

    double next_prime() {
        const auto &table = prime_table();
        if (prime_cursor >= static_cast<int>(table.size()))
            fail(ErrorCode::Internal, "row_space: prime budget exhausted");
        return table[prime_cursor++];
    }

    int live_count() const {
        int n = 0;
        for (const ModElim &e : elims) n += e.alive;
        return n;
    }

    // Brings one more prime into the tandem by replaying only the recorded
    // pivot rows, each against the slots discovered before it. Returns false
    // when the candidate prime cannot reproduce the shared pivot structure;
    // a repeat failure at the same slot means the structure itself is off
    // (an original prime hid a leading entry) and the caller must restart.
    bool add_prime(std::vector<double> *buf, int *bad_slot) {
        ModElim e;
        e.init(next_prime(), cols, big);
        for (int s = 0; s < rank; ++s) {
            e.load(rows[pivot_origin[s]], buf->data());
            int got = e.absorb(buf->data(), slot_of_col, s);
            if (got != pivcols[s]) {
                *bad_slot = s;
                return false;
            }
        }
        elims.push_back(std::move(e));
        return true;
    }

    // Feeds one input row to every live elimination. Pivot decisions must
    // agree; an elimination that sees the leading entry vanish early has lost
    // rank mod its prime and is dropped.
    void feed(int ri, std::vector<double> *buf) {
        processed[ri] = 1;
        ++processed_count;
        int best = cols;
        std::vector<int> got(elims.size(), -1);
        for (std::size_t e = 0; e < elims.size(); ++e) {
            if (!elims[e].alive) continue;
            elims[e].load(rows[ri], buf->data());
            got[e] = elims[e].absorb(buf->data(), slot_of_col, cols);
            if (got[e] >= 0) best = std::min(best, got[e]);
        }
        if (best == cols) return; // dependent in every live elimination
        for (std::size_t e = 0; e < elims.size(); ++e) {
            if (!elims[e].alive) continue;
            if (got[e] != best) {
                // The stored structure of this elimination no longer matches
                // the shared pivot set, so it cannot be used further.
                elims[e].alive = false;
                if (got[e] >= 0) {
                    elims[e].off.pop_back();
                    elims[e].pivcol.pop_back();
                }
            }
        }
        if (live_count() == 0) return; // caller restarts with fresh primes
        slot_of_col[best] = rank++;
        pivcols.push_back(best);
        pivot_origin.push_back(ri);
    }

    std::vector<int> free_cols() const {
        std::vector<int> f;
        f.reserve(cols - rank);
        for (int c = 0; c < cols; ++c)
            if (slot_of_col[c] < 0) f.push_back(c);
        return f;
    }

    // Reconstructs the reduced tails over Q and verifies the implied kernel
    // vectors against every input row. On success fills tails_out. On
    // failure, *bad_row names an unprocessed independent row to resume from,
    // or stays -1 when another prime is required.
    bool certify(const std::vector<int> &free,
                 std::vector<std::vector<BigRational>> *tails_out,
                 int *bad_row) {
        *bad_row = -1;
        const int k = static_cast<int>(free.size());
        tails_out->assign(rank, std::vector<BigRational>(k));
        if (k > 0) {
            std::vector<std::vector<double>> t(elims.size());
            std::vector<const ModElim *> live;
            std::vector<const std::vector<double> *> livet;
            for (std::size_t e = 0; e < elims.size(); ++e) {
                if (!elims[e].alive) continue;
                elims[e].backsolve(free, &t[e]);
                live.push_back(&elims[e]);
                livet.push_back(&t[e]);
            }
            BigInt modulus = 1;
            for (const ModElim *e : live)
                modulus *= BigInt(static_cast<long>(e->p));
            for (int i = 0; i < rank; ++i)
                for (int f = 0; f < k; ++f) {
                    BigInt val = 0, m = 1;
                    for (std::size_t e = 0; e < live.size(); ++e) {
                        const long pe = static_cast<long>(live[e]->p);
                        const long re = static_cast<long>(
                            (*livet[e])[static_cast<std::size_t>(i) * k + f]);
                        // Incremental CRT: adjust val by a multiple of m.
                        BigInt diff = BigInt(re) - val;
                        long d = static_cast<long>(mpz_fdiv_ui(
                            diff.get_mpz_t(), static_cast<unsigned long>(pe)));
                        long mr = static_cast<long>(mpz_fdiv_ui(
                            m.get_mpz_t(), static_cast<unsigned long>(pe)));
                        long step = static_cast<long>(
                            (static_cast<long long>(d) * inverse_mod(mr, pe)) %
                            pe);
                        val += m * step;
                        m *= pe;
                    }
                    if (2 * val > modulus) val -= modulus;
                    if (!rat_reconstruct(val, modulus,
                                         &(*tails_out)[i][f])) {
#ifdef QRANK_TRACE
                        std::fprintf(stderr,
                                     "trace: reconstruct fail i=%d f=%d\n", i,
                                     f);
#endif
                        return false;
                    }
                }
        }
        bool ok = verify_kernel(free, *tails_out, bad_row);
#ifdef QRANK_TRACE
        if (ok)
            std::fprintf(stderr, "trace: certified rank=%d k=%d primes=%d\n",
                         rank, static_cast<int>(free.size()), live_count());
#endif
        return ok;
    }

    // Exact check that each kernel candidate annihilates every row. The
    // candidate for free column f has a 1 there and -tail[i][f] at pivot i;
    // denominators are cleared so the dot products run in integers.
    bool verify_kernel(const std::vector<int> &free,
                       const std::vector<std::vector<BigRational>> &tails,
                       int *bad_row) {
        const int k = static_cast<int>(free.size());
        for (int f = 0; f < k; ++f) {
            BigInt den = 1;
            for (int i = 0; i < rank; ++i)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                        tails[i][f].get_den().get_mpz_t());
            std::vector<BigInt> w(cols, BigInt(0));
            w[free[f]] = den;
            for (int i = 0; i < rank; ++i) {
                const BigRational &t = tails[i][f];
                if (sgn(t) == 0) continue;
                w[pivot_of_slot(i)] = -BigInt(t.get_num() * (den / t.get_den()));
            }
            BigInt acc;
            for (std::size_t ri = 0; ri < rows.size(); ++ri) {
                acc = 0;
                for (const auto &[c, v] : rows[ri].terms)
                    if (sgn(w[c]) != 0)
                        acc += BigInt(static_cast<long>(v)) * w[c];
                if (sgn(acc) != 0) {
                    *bad_row = processed[ri] ? -1 : static_cast<int>(ri);
#ifdef QRANK_TRACE
                    std::fprintf(stderr,
                                 "trace: verify fail f=%d row=%zu proc=%d\n",
                                 f, ri, int(processed[ri]));
#endif
                    return false;
                }
            }
        }
        return true;
    }

    int pivot_of_slot(int slot) const { return pivcols[slot]; }
};

} // namespace

const std::vector<std::vector<BigRational>> &RowSpace::tails() const {
    if (!has_tails_)
        fail(ErrorCode::Internal, "RowSpace built without reduced tails");
    return tails_;
}

std::vector<BigRational> RowSpace::kernel_vector(int f) const {
    if (!has_tails_)
        fail(ErrorCode::Internal, "RowSpace built without reduced tails");
    std::vector<BigRational> v(cols_, BigRational(0));
    v[free_cols_[f]] = 1;
    for (int i = 0; i < rank(); ++i) {
        BigRational c = -tails_[i][f];
        v[pivot_cols_[i]] = c;
    }
    return v;
}

void RowSpace::reduce(const std::vector<std::pair<int, BigRational>> &v,
                      std::vector<BigRational> *pivot_coeffs,
                      std::vector<BigRational> *residual) const {
    if (!has_tails_)
        fail(ErrorCode::Internal, "RowSpace built without reduced tails");
    if (pivot_coeffs) pivot_coeffs->assign(rank(), BigRational(0));
    if (residual) residual->assign(nullity(), BigRational(0));
    for (const auto &[c, x] : v) {
        int pi = pivot_slot_of_col_[c];
        if (pi >= 0) {
            if (pivot_coeffs) (*pivot_coeffs)[pi] = x;
            if (residual)
                for (int f = 0; f < nullity(); ++f) {
                    BigRational d = x * tails_[pi][f];
                    (*residual)[f] -= d;
                }
        } else if (residual) {
            (*residual)[free_slot_of_col_[c]] += x;
        }
    }
}

bool RowSpace::contains(const SparseRow &v) const {
    std::vector<std::pair<int, BigRational>> vr;
    vr.reserve(v.terms.size());
    for (const auto &[c, x] : v.terms)
        vr.emplace_back(c, BigRational(static_cast<long>(x)));
    std::vector<BigRational> res;
    reduce(vr, nullptr, &res);
    for (const BigRational &r : res)
        if (sgn(r) != 0) return false;
    return true;
}

RowSpace row_space(const std::vector<SparseRow> &rows, int cols,
                   bool want_tails) {
    for (const SparseRow &r : rows)
        for (const auto &[c, v] : r.terms)
            if (c < 0 || c >= cols)
                fail(ErrorCode::InvalidArgument, "row entry out of range");

    RowSpace out;
    out.cols_ = cols;
    out.has_tails_ = want_tails;
    if (cols == 0) return out;

    const int nrows = static_cast<int>(rows.size());
    const bool big = cols > 4096;
    const int stall_after = std::max(64, cols / 32);

    Driver drv(rows, cols, want_tails);
    std::vector<double> buf(cols);
    std::vector<std::vector<BigRational>> tails;

    int width = big ? 1 : 2; // tandem width at each (re)start
    bool done = false;
    while (!done) {
        drv.start(width);
        int next = 0, since_rank = 0, last_bad_slot = -1;
        bool restart = false;
        while (!done && !restart) {
            if (drv.live_count() == 0) {
                width = std::max(width, 2);
                restart = true;
                break;
            }
            if (drv.rank == cols) {
                // Full column rank: the pivot minor settles everything.
                tails.clear();
                done = true;
                break;
            }
            const bool at_end = next >= nrows;
            if (at_end || (big && drv.processed_count >= cols + 32 &&
                           since_rank >= stall_after)) {
                std::vector<int> free = drv.free_cols();
                int bad = -1;
                if (drv.certify(free, &tails, &bad)) {
                    done = true;
                    break;
                }
                if (bad >= 0) {
                    drv.feed(bad, &buf); // an independent row slipped past
                    since_rank = 0;
                    continue;
                }
                // The modulus is too small: double the tandem by replay.
                const int to_add = std::max(1, drv.live_count());
                for (int a = 0; a < to_add && !restart; ++a) {
                    int bad_slot = -1;
                    if (drv.add_prime(&buf, &bad_slot)) continue;
                    if (bad_slot == last_bad_slot) {
                        // The shared structure cannot be reproduced; an
                        // original prime must have hidden a leading entry.
                        // Rebuild from scratch with a wider tandem.
                        width = drv.live_count() + 1;
                        restart = true;
                    } else {
                        last_bad_slot = bad_slot;
                        --a; // this prime is burnt, try the next one
                    }
                }
                continue;
            }
            const int before = drv.rank;
            drv.feed(next++, &buf);
            since_rank = drv.rank > before ? 0 : since_rank + 1;
        }
    }

    std::vector<int> order(drv.rank);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return drv.pivot_of_slot(a) < drv.pivot_of_slot(b);
    });
    out.pivot_cols_.resize(drv.rank);
    out.pivot_origin_.resize(drv.rank);
    out.pivot_slot_of_col_.assign(cols, -1);
    out.free_slot_of_col_.assign(cols, -1);
    for (int i = 0; i < drv.rank; ++i) {
        out.pivot_cols_[i] = drv.pivot_of_slot(order[i]);
        out.pivot_origin_[i] = drv.pivot_origin[order[i]];
        out.pivot_slot_of_col_[out.pivot_cols_[i]] = i;
    }
    out.free_cols_ = drv.free_cols();
    for (int f = 0; f < static_cast<int>(out.free_cols_.size()); ++f)
        out.free_slot_of_col_[out.free_cols_[f]] = f;
    if (want_tails) {
        out.has_tails_ = true;
        out.tails_.resize(drv.rank);
        if (out.nullity() == 0)
            for (auto &t : out.tails_) t.clear();
        else
            for (int i = 0; i < drv.rank; ++i)
                out.tails_[i] = std::move(tails[order[i]]);
    }
    return out;
}

int exact_rank(const std::vector<SparseRow> &rows, int cols) {
    return row_space(rows, cols, false).rank();
}

} // namespace qth
