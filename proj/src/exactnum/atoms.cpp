#include "exactnum/atoms.hpp"

#include <algorithm>
#include <numeric>

namespace qth {

namespace {

// Exact division of univariate integer polynomials, ascending coefficients.
std::vector<long> divide_univariate(const std::vector<long> &a,
                                    const std::vector<long> &b) {
    std::vector<long> rem = a;
    std::vector<long> quot(a.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        long lead = rem[i + b.size() - 1];
        if (lead % b.back() != 0)
            fail(ErrorCode::Internal, "cyclotomic division leaves a remainder");
        long c = lead / b.back();
        quot[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
    }
    for (long r : rem)
        if (r != 0)
            fail(ErrorCode::Internal, "cyclotomic division leaves a remainder");
    return quot;
}

std::mutex g_cyc_mutex;
std::map<int, std::vector<long>> g_cyc_cache;

} // namespace

const std::vector<long> &cyclotomic_coeffs(int d) {
    if (d < 1) fail(ErrorCode::InvalidArgument, "cyclotomic order must be >= 1");
    std::lock_guard<std::mutex> lock(g_cyc_mutex);
    auto it = g_cyc_cache.find(d);
    if (it != g_cyc_cache.end()) return it->second;
    // x^d - 1 divided by Phi_e for every proper divisor e of d.
    std::vector<long> p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto sub = g_cyc_cache.find(e);
        if (sub == g_cyc_cache.end()) {
            // Divisors are resolved before d by the recursion below.
            std::vector<long> lower(e + 1, 0);
            lower[0] = -1;
            lower[e] = 1;
            for (int f = 1; f < e; ++f)
                if (e % f == 0) {
                    if (!g_cyc_cache.count(f))
                        fail(ErrorCode::Internal, "cyclotomic cache disorder");
                    lower = divide_univariate(lower, g_cyc_cache.at(f));
                }
            sub = g_cyc_cache.emplace(e, std::move(lower)).first;
        }
        p = divide_univariate(p, sub->second);
    }
    return g_cyc_cache.emplace(d, std::move(p)).first->second;
}

QtLaurent cyclotomic_at_monomial(int d, int a, int b) {
    if (a < 0 || b < 0 || (a == 0 && b == 0) || std::gcd(a, b) != 1)
        fail(ErrorCode::InvalidArgument, "bad monomial for cyclotomic atom");
    const std::vector<long> &c = cyclotomic_coeffs(d);
    QtLaurent p;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            p.add_term(a * static_cast<int>(i), b * static_cast<int>(i),
                       BigRational(c[i]));
    return p;
}

QtLaurent cyclotomic_homog(int d, int a, int b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        fail(ErrorCode::InvalidArgument, "bad pair for homogeneous atom");
    const std::vector<long> &c = cyclotomic_coeffs(d);
    int m = static_cast<int>(c.size()) - 1;
    QtLaurent p;
    for (int i = 0; i <= m; ++i)
        if (c[i] != 0) p.add_term(a * i, b * (m - i), BigRational(c[i]));
    return p;
}

AtomRegistry &AtomRegistry::instance() {
    static AtomRegistry reg;
    return reg;
}

const QtLaurent &AtomRegistry::atom(int id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (id < 0 || id >= static_cast<int>(atoms_.size()))
        fail(ErrorCode::Internal, "unknown atom id");
    return atoms_[id];
}

bool AtomRegistry::is_opaque(int id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return opaque_.count(id) > 0;
}

int AtomRegistry::intern(const QtLaurent &p, bool opaque) {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i] == p) return static_cast<int>(i);
    atoms_.push_back(p);
    int id = static_cast<int>(atoms_.size()) - 1;
    if (opaque) opaque_.insert(id);
    return id;
}

int AtomRegistry::cyclotomic_id(int d, int a, int b) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_tuple(d, a, b);
    auto it = cyc_ids_.find(key);
    if (it != cyc_ids_.end()) return it->second;
    int id = intern(cyclotomic_at_monomial(d, a, b), false);
    cyc_ids_.emplace(key, id);
    return id;
}

int AtomRegistry::homog_id(int d, int a, int b) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_tuple(d, a, b);
    auto it = homog_ids_.find(key);
    if (it != homog_ids_.end()) return it->second;
    int id = intern(cyclotomic_homog(d, a, b), false);
    homog_ids_.emplace(key, id);
    return id;
}

void AtomRegistry::seed_binomials(int bound) {
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b) {
            if (a == 0 && b == 0) continue;
            int g = std::gcd(a, b);
            for (int d = 1; d <= g; ++d)
                if (g % d == 0) cyclotomic_id(d, a / g, b / g);
        }
}

void AtomRegistry::seed_differences(int bound) {
    for (int a = 1; a <= bound; ++a)
        for (int b = 1; b <= bound; ++b) {
            int g = std::gcd(a, b);
            for (int d = 1; d <= g; ++d)
                if (g % d == 0) homog_id(d, a / g, b / g);
        }
}

AtomRegistry::Split AtomRegistry::factor(const QtLaurent &p) {
    if (p.is_zero()) fail(ErrorCode::InvalidArgument, "factor of zero");
    Split out;
    out.sq = p.min_q_exp();
    out.st = p.min_t_exp();
    QtLaurent rest = p;
    rest.shift(-out.sq, -out.st);
    BigRational applied;
    rest = rest.primitive_part(&applied);
    out.coeff = 1 / applied;

    std::size_t atom_count;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        atom_count = atoms_.size();
    }
    for (std::size_t id = 0; id < atom_count && !rest.is_constant(); ++id) {
        const QtLaurent &a = atom(static_cast<int>(id));
        QtLaurent quot;
        while (try_divide(rest, a, &quot)) {
            rest = std::move(quot);
            out.factors[static_cast<int>(id)] += 1;
            if (rest.is_constant()) break;
        }
    }
    if (rest == QtLaurent(1)) return out;

    // Two-term remainders are binomials in disguise; everything in the
    // intended universe lands here or earlier.
    if (rest.term_count() == 2) {
        auto lead = rest.terms().begin();
        auto tail = std::next(lead);
        if (lead->second == 1 &&
            (tail->second == 1 || tail->second == BigRational(-1))) {
            bool plus = tail->second == 1;
            auto emit = [&](int id) { out.factors[id] += 1; };
            if (tail->first == QtExp{0, 0}) {
                // 1 +- u^g over the monomial u = q^a t^b.
                int A = lead->first.qe, B = lead->first.te;
                int g = std::gcd(A, B);
                int a = A / g, b = B / g;
                if (!plus) {
                    for (int d = 1; d <= g; ++d)
                        if (g % d == 0) emit(cyclotomic_id(d, a, b));
                } else {
                    for (int d = 1; d <= 2 * g; ++d)
                        if (2 * g % d == 0 && g % d != 0)
                            emit(cyclotomic_id(d, a, b));
                }
                return out;
            }
            if (lead->first.te == 0 && tail->first.qe == 0) {
                // q^A +- t^B.
                int A = lead->first.qe, B = tail->first.te;
                int g = std::gcd(A, B);
                int a = A / g, b = B / g;
                if (!plus) {
                    for (int d = 1; d <= g; ++d)
                        if (g % d == 0) emit(homog_id(d, a, b));
                } else {
                    for (int d = 1; d <= 2 * g; ++d)
                        if (2 * g % d == 0 && g % d != 0) emit(homog_id(d, a, b));
                }
                return out;
            }
        }
    }

    std::lock_guard<std::mutex> lock(mutex_);
    out.factors[intern(rest, true)] += 1;
    return out;
}

QtLaurent AtomRegistry::expand(const Factors &f) const {
    QtLaurent p(1);
    for (const auto &[id, e] : f) {
        const QtLaurent &a = atom(id);
        for (int k = 0; k < e; ++k) p *= a;
    }
    return p;
}

void FactoredSum::add(const QtLaurent &num, const BigRational &c, int sq,
                      int st, const AtomRegistry::Factors &den) {
    if (num.is_zero() || qth::is_zero(c)) return;
    AtomRegistry &reg = AtomRegistry::instance();
    QtLaurent incoming = num.scaled(c, sq, st);
    // Raise both sides to the exponent-wise max denominator.
    for (const auto &[id, e] : den) {
        int have = 0;
        if (auto it = den_.find(id); it != den_.end()) have = it->second;
        if (e > have) {
            const QtLaurent &a = reg.atom(id);
            for (int k = have; k < e; ++k) num_ *= a;
            den_[id] = e;
        }
    }
    for (const auto &[id, e] : den_) {
        int incoming_e = 0;
        if (auto it = den.find(id); it != den.end()) incoming_e = it->second;
        if (e > incoming_e) {
            const QtLaurent &a = reg.atom(id);
            for (int k = incoming_e; k < e; ++k) incoming *= a;
        }
    }
    num_ += incoming;
}

QtFraction FactoredSum::finish() const {
    if (num_.is_zero()) return QtFraction();
    AtomRegistry &reg = AtomRegistry::instance();
    QtLaurent num = num_;
    AtomRegistry::Factors rest;
    bool saw_opaque = false;
    for (const auto &[id, e] : den_) {
        const QtLaurent &a = reg.atom(id);
        int left = e;
        QtLaurent quot;
        while (left > 0 && try_divide(num, a, &quot)) {
            num = std::move(quot);
            --left;
        }
        if (left > 0) {
            rest[id] = left;
            if (reg.is_opaque(id)) saw_opaque = true;
        }
    }
    QtLaurent den = reg.expand(rest);
    if (saw_opaque) return QtFraction::make(num, den);
    return QtFraction::make_coprime(BigRational(1), 0, 0, num, den);
}

} // namespace qth
