#include "symfunc/basis_tables.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <utility>

namespace qth {

int DegreeTable::index_of(const Partition &mu) const {
    auto it = index.find(mu);
    if (it == index.end())
        fail(ErrorCode::InvalidArgument,
             mu.to_string() + " is not a partition of " +
                 std::to_string(degree));
    return it->second;
}

namespace {

std::atomic<int> g_degree_cap{10};

// ---- Murnaghan-Nakayama ------------------------------------------------

using Parts = std::vector<int>;

Parts strip_zeros(Parts v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

bool weakly_decreasing(const Parts &v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1]) return false;
    return true;
}

// Removable border strips of size k, as (remaining shape, height) pairs. A
// strip spanning rows i..j of the shape leaves row r holding shape[r+1]-1 for
// i <= r < j and row j holding shape[i]-k+(j-i).
std::vector<std::pair<Parts, int>> strip_removals(const Parts &shape, int k) {
    std::vector<std::pair<Parts, int>> out;
    int rows = static_cast<int>(shape.size());
    for (int i = 0; i < rows; ++i)
        for (int j = i; j < rows; ++j) {
            Parts left = shape;
            for (int r = i; r < j; ++r) left[r] = shape[r + 1] - 1;
            left[j] = shape[i] - k + (j - i);
            if (left[j] < 0) continue;
            if (j > i && shape[j] - left[j] < 1) continue; // strip misses row j
            if (!weakly_decreasing(left)) continue;
            out.emplace_back(strip_zeros(std::move(left)), j - i);
        }
    return out;
}

std::mutex g_mn_mutex;
std::map<std::pair<Parts, Parts>, BigInt> g_mn_memo;

BigInt mn_recurse(const Parts &shape, const Parts &cycles) {
    if (cycles.empty()) return shape.empty() ? BigInt(1) : BigInt(0);
    auto key = std::make_pair(shape, cycles);
    auto hit = g_mn_memo.find(key);
    if (hit != g_mn_memo.end()) return hit->second;

    Parts rest(cycles.begin() + 1, cycles.end());
    BigInt total = 0;
    for (const auto &[left, height] : strip_removals(shape, cycles.front())) {
        BigInt sub = mn_recurse(left, rest);
        if (height % 2) sub = -sub;
        total += sub;
    }
    g_mn_memo.emplace(std::move(key), total);
    return total;
}

// ---- Power-sum expansions of e_k, h_k and their products ---------------

// A symmetric function as a rational combination of p_lambda.
using PExpansion = std::map<Partition, BigRational>;

Parts merge_parts(const Parts &a, const Parts &b) {
    Parts m = a;
    m.insert(m.end(), b.begin(), b.end());
    std::sort(m.begin(), m.end(), std::greater<int>());
    return m;
}

PExpansion p_product(const PExpansion &a, const PExpansion &b) {
    PExpansion out;
    for (const auto &[la, ca] : a)
        for (const auto &[lb, cb] : b) {
            Partition merged(merge_parts(la.parts(), lb.parts()));
            BigRational c = ca * cb;
            auto [it, fresh] = out.emplace(std::move(merged), c);
            if (!fresh) it->second += c;
        }
    return out;
}

PExpansion complete_in_p(int k) {
    PExpansion out;
    for (const Partition &rho : partitions_of(k)) {
        BigRational c(1);
        c /= BigRational(centralizer_order(rho));
        out.emplace(rho, c);
    }
    return out;
}

PExpansion elementary_in_p(int k) {
    PExpansion out = complete_in_p(k);
    for (auto &[rho, c] : out)
        if ((k - rho.num_parts()) % 2) c = -c;
    return out;
}

// ---- Exact matrix helpers ----------------------------------------------

QMatrix identity_matrix(int n) {
    QMatrix m(n, std::vector<BigRational>(n, BigRational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix transpose(const QMatrix &m) {
    int n = static_cast<int>(m.size());
    QMatrix t(n, std::vector<BigRational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[j][i] = m[i][j];
    return t;
}

QMatrix invert(const QMatrix &m) {
    int n = static_cast<int>(m.size());
    QMatrix a = m, inv = identity_matrix(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
        if (pivot == n)
            fail(ErrorCode::SingularMatrix, "basis transition not invertible");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        BigRational lead = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= lead;
            inv[col][j] /= lead;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            BigRational factor = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= factor * a[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

// ---- Table construction ------------------------------------------------

DegreeTable build_table(int degree) {
    DegreeTable t;
    t.degree = degree;
    t.mus = partitions_of(degree);
    int n = static_cast<int>(t.mus.size());
    for (int i = 0; i < n; ++i) t.index.emplace(t.mus[i], i);
    for (const Partition &mu : t.mus) t.z.push_back(centralizer_order(mu));

    t.chi.assign(n, std::vector<BigInt>(n));
    for (int l = 0; l < n; ++l)
        for (int r = 0; r < n; ++r)
            t.chi[l][r] = mn_character(t.mus[l], t.mus[r]);

    // Schur coordinates of p_mu: p_rho = sum_lambda chi^lambda_rho s_lambda.
    QMatrix p_mat(n, std::vector<BigRational>(n));
    for (int l = 0; l < n; ++l)
        for (int r = 0; r < n; ++r) p_mat[l][r] = BigRational(t.chi[l][r]);

    auto schur_matrix_from = [&](PExpansion (*single)(int)) {
        QMatrix m(n, std::vector<BigRational>(n, BigRational(0)));
        for (int col = 0; col < n; ++col) {
            PExpansion prod{{Partition(), BigRational(1)}};
            for (int part : t.mus[col].parts())
                prod = p_product(prod, single(part));
            for (const auto &[rho, c] : prod) {
                int r = t.index_of(rho);
                for (int l = 0; l < n; ++l)
                    m[l][col] += BigRational(t.chi[l][r]) * c;
            }
        }
        return m;
    };

    QMatrix h_mat = schur_matrix_from(&complete_in_p);
    QMatrix e_mat = schur_matrix_from(&elementary_in_p);
    // h_mu = sum_lambda K_{lambda,mu} s_lambda, and the monomial basis is
    // dual to h under the Hall pairing, so m = (K^T)^{-1} in Schur terms.
    QMatrix m_mat = invert(transpose(h_mat));

    t.to_schur[SymBasis::Schur] = identity_matrix(n);
    t.to_schur[SymBasis::Power] = std::move(p_mat);
    t.to_schur[SymBasis::Homogeneous] = std::move(h_mat);
    t.to_schur[SymBasis::Elementary] = std::move(e_mat);
    t.to_schur[SymBasis::Monomial] = std::move(m_mat);
    for (const auto &[basis, mat] : t.to_schur)
        t.from_schur[basis] =
            basis == SymBasis::Schur ? identity_matrix(n) : invert(mat);
    return t;
}

std::mutex g_table_mutex;
std::map<int, DegreeTable> g_tables;

} // namespace

BigInt mn_character(const Partition &shape, const Partition &cycle_type) {
    if (shape.size() != cycle_type.size())
        fail(ErrorCode::InvalidArgument,
             "character requires shape and cycle type of equal size");
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    return mn_recurse(shape.parts(), cycle_type.parts());
}

const DegreeTable &degree_table(int degree) {
    if (degree < 0)
        fail(ErrorCode::InvalidArgument, "negative symmetric function degree");
    if (degree > symfunc_degree_cap())
        fail(ErrorCode::ResourceBound,
             "degree " + std::to_string(degree) +
                 " exceeds the symmetric-function cap " +
                 std::to_string(symfunc_degree_cap()) +
                 " (raise it with set_symfunc_degree_cap)");
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_tables.find(degree);
    if (it == g_tables.end())
        it = g_tables.emplace(degree, build_table(degree)).first;
    return it->second;
}

int symfunc_degree_cap() { return g_degree_cap.load(); }

void set_symfunc_degree_cap(int cap) {
    if (cap < 0) fail(ErrorCode::InvalidArgument, "negative degree cap");
    g_degree_cap.store(cap);
}

} // namespace qth
