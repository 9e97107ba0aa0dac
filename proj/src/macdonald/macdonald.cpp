#include "macdonald/macdonald.hpp"

#include "exactnum/atoms.hpp"

#include <mutex>

namespace qth {

namespace {

using Factors = AtomRegistry::Factors;

QtLaurent one_minus_power(int qe, int te) {
    return QtLaurent(1) - QtLaurent::monomial(BigRational(1), qe, te);
}

// Diagonal weight <p_rho, p_rho> = z_rho prod (1-q^{rho_i})/(1-t^{rho_i}),
// held as an expanded numerator (denominator signs folded in) over a
// factored cyclotomic denominator.
void power_weight(AtomRegistry &reg, const Partition &rho, const BigInt &z,
                  QtLaurent &num, Factors &den) {
    num = QtLaurent(BigRational(z));
    bool negate = false;
    for (int k : rho.parts()) {
        num *= one_minus_power(k, 0);
        negate = !negate; // 1 - t^k = -(t^k - 1)
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) den[reg.cyclotomic_id(d, 0, 1)] += 1;
    }
    if (negate) num.scale(BigRational(-1));
}

} // namespace

QtFraction qt_inner(const SymFunc &f, const SymFunc &g) {
    if (f.degree() != g.degree() || f.is_zero() || g.is_zero())
        return QtFraction();
    AtomRegistry &reg = AtomRegistry::instance();
    reg.seed_binomials(f.degree() + 1);
    SymFunc::Coeffs pf = f.to_basis(SymBasis::Power);
    SymFunc::Coeffs pg = g.to_basis(SymBasis::Power);
    FactoredSum sum;
    for (const auto &[rho, a] : pf) {
        auto it = pg.find(rho);
        if (it == pg.end()) continue;
        const QtFraction &b = it->second;
        if (a.is_zero() || b.is_zero()) continue;
        QtLaurent wnum;
        Factors den;
        power_weight(reg, rho, centralizer_order(rho), wnum, den);
        AtomRegistry::Split da = reg.factor(a.den());
        AtomRegistry::Split db = reg.factor(b.den());
        sum.add(a.num() * b.num() * wnum,
                a.coeff() * b.coeff() / (da.coeff * db.coeff),
                a.scale_q() + b.scale_q() - da.sq - db.sq,
                a.scale_t() + b.scale_t() - da.st - db.st,
                merge_factors(den, merge_factors(da.factors, db.factors)));
    }
    return sum.finish();
}

namespace {

// Everything the incremental construction keeps about a finished P: both
// coordinate systems with the atom factorizations of their denominators, so
// later inner products and combinations run entirely over factored sums.
struct BuiltP {
    std::vector<QtFraction> scoord; // Schur coordinates, aligned with mus
    std::vector<Factors> sden;
    std::vector<QtFraction> pcoord; // power-sum coordinates
    std::vector<Factors> pden;
    QtFraction norm; // <P, P>_{q,t}
};

// P_lambda for every lambda of degree n: orthogonal projection over the
// monomial basis, processed in dominance-increasing order so each P is monic
// in its own m_lambda with only dominance-lower monomial terms. Because the
// built family is already orthogonal, each projection coefficient pairs
// m_lambda directly with a finished P_mu; intermediate partial sums never
// enter an inner product, and all sums accumulate over factored
// denominators, so no gcd ever sees a swollen operand.
std::map<Partition, SymFunc> build_p_basis(int n) {
    const DegreeTable &table = degree_table(n);
    int count = static_cast<int>(table.mus.size());
    AtomRegistry &reg = AtomRegistry::instance();
    reg.seed_binomials(n + 1);
    const QMatrix &m2s = table.to_schur.at(SymBasis::Monomial);
    const QMatrix &s2p = table.from_schur.at(SymBasis::Power);

    std::vector<QtLaurent> wnum(count);
    std::vector<Factors> wden(count);
    for (int i = 0; i < count; ++i)
        power_weight(reg, table.mus[i], table.z[i], wnum[i], wden[i]);

    std::map<Partition, SymFunc> p_basis;
    std::vector<BuiltP> built;
    for (int li = count - 1; li >= 0; --li) {
        const Partition &lam = table.mus[li];
        // Rational power-sum coordinates of m_lambda.
        std::vector<BigRational> mp(count, BigRational(0));
        for (int s = 0; s < count; ++s) {
            if (qth::is_zero(m2s[s][li])) continue;
            for (int r = 0; r < count; ++r)
                mp[r] += s2p[r][s] * m2s[s][li];
        }
        auto inner_m = [&](const BuiltP &b) {
            FactoredSum sum;
            for (int r = 0; r < count; ++r) {
                if (qth::is_zero(mp[r]) || b.pcoord[r].is_zero()) continue;
                const QtFraction &pc = b.pcoord[r];
                sum.add(pc.num() * wnum[r], pc.coeff() * mp[r], pc.scale_q(),
                        pc.scale_t(), merge_factors(b.pden[r], wden[r]));
            }
            return sum.finish();
        };

        std::vector<QtFraction> cs(built.size());
        std::vector<Factors> csden(built.size());
        for (std::size_t j = 0; j < built.size(); ++j) {
            cs[j] = inner_m(built[j]) / built[j].norm;
            if (!cs[j].is_zero()) csden[j] = reg.factor(cs[j].den()).factors;
        }

        BuiltP cur;
        cur.scoord.resize(count);
        cur.sden.resize(count);
        cur.pcoord.resize(count);
        cur.pden.resize(count);
        SymFunc::Coeffs slots;
        for (int s = 0; s < count; ++s) {
            FactoredSum sum;
            if (!qth::is_zero(m2s[s][li]))
                sum.add(QtLaurent(1), m2s[s][li], 0, 0, Factors());
            for (std::size_t j = 0; j < built.size(); ++j) {
                if (cs[j].is_zero() || built[j].scoord[s].is_zero()) continue;
                const QtFraction &pc = built[j].scoord[s];
                sum.add(cs[j].num() * pc.num(), -(cs[j].coeff() * pc.coeff()),
                        cs[j].scale_q() + pc.scale_q(),
                        cs[j].scale_t() + pc.scale_t(),
                        merge_factors(csden[j], built[j].sden[s]));
            }
            QtFraction v = sum.finish();
            if (v.is_zero()) continue;
            cur.sden[s] = reg.factor(v.den()).factors;
            cur.scoord[s] = v;
            slots.emplace(table.mus[s], std::move(v));
        }
        for (int r = 0; r < count; ++r) {
            FactoredSum sum;
            for (int s = 0; s < count; ++s) {
                if (cur.scoord[s].is_zero() || qth::is_zero(s2p[r][s]))
                    continue;
                const QtFraction &pc = cur.scoord[s];
                sum.add(pc.num(), pc.coeff() * s2p[r][s], pc.scale_q(),
                        pc.scale_t(), cur.sden[s]);
            }
            QtFraction v = sum.finish();
            if (v.is_zero()) continue;
            cur.pden[r] = reg.factor(v.den()).factors;
            cur.pcoord[r] = std::move(v);
        }
        // <P,P> = <P, m_lambda>: the lower monomial terms are orthogonal to P.
        cur.norm = inner_m(cur);
        if (cur.norm.is_zero())
            fail(ErrorCode::SingularMatrix,
                 "degenerate Gram-Schmidt at " + lam.to_string());
        p_basis.emplace(lam, SymFunc::from_basis(n, slots, SymBasis::Schur));
        built.push_back(std::move(cur));
    }
    return p_basis;
}

QtFraction j_normalizer(const Partition &mu) {
    QtLaurent c(1);
    for (const Cell &x : mu.cells()) {
        auto [a, l] = arm_leg(mu, x);
        c *= one_minus_power(a, l + 1);
    }
    return QtFraction::from_laurent(c);
}

SymFunc twist_to_htilde(const Partition &mu, const SymFunc &j) {
    // 1/(1 - t^{-1}) as the p_k multiplier rule, coefficient twist first.
    QtFraction rule =
        QtFraction::make(QtLaurent(1),
                         QtLaurent(1) -
                             QtLaurent::monomial(BigRational(1), 0, -1));
    SymFunc h = j.plethys_sub(rule, CoeffTwist::InvertT);
    return h.scaled(QtFraction::monomial(BigRational(1), 0, mu.n_stat()));
}

void validate_entry(const Partition &mu, const SymFunc &h, ErrorCode integral,
                    ErrorCode positive) {
    int n = mu.size();
    for (const auto &[lambda, c] : h.coeffs()) {
        if (!c.is_polynomial() || !c.num().has_integer_coeffs() ||
            !is_integer(c.coeff()))
            fail(integral, "K(" + lambda.to_string() + "," + mu.to_string() +
                               ") is not an integer polynomial: " +
                               c.to_string());
        if (!c.to_laurent().has_nonneg_integer_coeffs())
            fail(positive, "K(" + lambda.to_string() + "," + mu.to_string() +
                               ") has a negative coefficient: " +
                               c.to_string());
    }
    if (!(h.schur_coeff(Partition::single_row(n)) == QtFraction(1)))
        fail(integral, "s_(n) coefficient of H~_" + mu.to_string() +
                           " is not 1");
    QtFraction top = h.schur_coeff(Partition::single_column(n));
    if (!(top == QtFraction::from_laurent(t_mu(mu))))
        fail(integral, "<e_n, H~_" + mu.to_string() +
                           "> misses the diagram monomial");
}

MacdonaldTable build_table(int n) {
    MacdonaldTable t;
    t.n = n;
    t.mus = partitions_of(n);
    t.p_poly = build_p_basis(n);
    for (const Partition &mu : t.mus) {
        SymFunc j = t.p_poly.at(mu).scaled(j_normalizer(mu));
        SymFunc h = twist_to_htilde(mu, j);
        validate_entry(mu, h, ErrorCode::IntegralityViolation,
                       ErrorCode::PositivityViolation);
        t.htilde.emplace(mu, std::move(h));
    }
    t.validated = true;
    return t;
}

std::mutex g_mac_mutex;
std::map<int, MacdonaldTable> g_mac_tables;
// P bases rebuilt on demand for tables that were installed from a cache and
// therefore only carry the H~ entries.
std::map<int, std::map<Partition, SymFunc>> g_p_bases;

// Star norms <H~_mu, H~_mu>_* per degree, built on first expansion.
struct StarData {
    std::vector<QtFraction> norm; // aligned with table.mus
};
std::mutex g_star_mutex;
std::map<int, StarData> g_star_data;

const QtFraction &star_multiplier() {
    static const QtFraction m = QtFraction::from_laurent(
        (QtLaurent(1) - QtLaurent::monomial(BigRational(1), 1, 0)) *
        (QtLaurent(1) - QtLaurent::monomial(BigRational(1), 0, 1)));
    return m;
}

const StarData &star_data(const MacdonaldTable &table) {
    std::lock_guard<std::mutex> lock(g_star_mutex);
    auto it = g_star_data.find(table.n);
    if (it != g_star_data.end()) return it->second;
    AtomRegistry::instance().seed_differences(table.n + 1);
    StarData d;
    d.norm.reserve(table.mus.size());
    for (const Partition &mu : table.mus) {
        const SymFunc &h = table.h(mu);
        QtFraction nrm = hall_inner(h.plethys_sub(star_multiplier()).dual(), h);
        if (nrm.is_zero())
            fail(ErrorCode::SingularMatrix,
                 "degenerate star norm at " + mu.to_string());
        d.norm.push_back(std::move(nrm));
    }
    return g_star_data.emplace(table.n, std::move(d)).first->second;
}

// Sum of c_mu * H~_mu over factored denominators, slot by slot; this is the
// resubstitution path for expansions and the recombination step of the
// nabla and Delta operators, where a pairwise canonical fold would pay a
// large gcd per addition.
SymFunc combine_htilde(const MacdonaldTable &table,
                       const std::map<Partition, QtFraction> &coeffs) {
    AtomRegistry &reg = AtomRegistry::instance();
    const DegreeTable &deg = degree_table(table.n);
    std::vector<FactoredSum> sums(deg.mus.size());
    for (const auto &[mu, c] : coeffs) {
        if (c.is_zero()) continue;
        AtomRegistry::Factors den;
        if (!c.is_laurent_polynomial()) den = reg.factor(c.den()).factors;
        // K~ entries are polynomials, so the denominator is c's alone.
        for (const auto &[sigma, k] : table.h(mu).coeffs())
            sums[deg.index_of(sigma)].add(
                c.num() * k.num(), c.coeff() * k.coeff(),
                c.scale_q() + k.scale_q(), c.scale_t() + k.scale_t(), den);
    }
    SymFunc::Coeffs slots;
    for (std::size_t i = 0; i < sums.size(); ++i) {
        QtFraction v = sums[i].finish();
        if (!v.is_zero()) slots.emplace(deg.mus[i], std::move(v));
    }
    return SymFunc::from_basis(table.n, slots, SymBasis::Schur);
}

} // namespace

const SymFunc &MacdonaldTable::h(const Partition &mu) const {
    auto it = htilde.find(mu);
    if (it == htilde.end())
        fail(ErrorCode::InvalidArgument,
             mu.to_string() + " is not a partition of " + std::to_string(n));
    return it->second;
}

const MacdonaldTable &macdonald_table(int n) {
    if (n < 0) fail(ErrorCode::InvalidArgument, "negative degree");
    std::lock_guard<std::mutex> lock(g_mac_mutex);
    auto it = g_mac_tables.find(n);
    if (it == g_mac_tables.end())
        it = g_mac_tables.emplace(n, build_table(n)).first;
    return it->second;
}

const MacdonaldTable &macdonald_table_install(
    int n, const std::map<Partition, SymFunc> &entries) {
    MacdonaldTable t;
    t.n = n;
    t.mus = partitions_of(n);
    t.route = "cache";
    if (entries.size() != t.mus.size())
        fail(ErrorCode::CorruptCache, "cache table for degree " +
                                          std::to_string(n) +
                                          " has the wrong entry count");
    for (const Partition &mu : t.mus) {
        auto it = entries.find(mu);
        if (it == entries.end())
            fail(ErrorCode::CorruptCache,
                 "cache table missing " + mu.to_string());
        validate_entry(mu, it->second, ErrorCode::CorruptCache,
                       ErrorCode::CorruptCache);
        t.htilde.emplace(mu, it->second);
    }
    t.validated = true;
    std::lock_guard<std::mutex> lock(g_mac_mutex);
    return g_mac_tables.insert_or_assign(n, std::move(t)).first->second;
}

SymFunc macdonald_P(const Partition &lambda) {
    int n = lambda.size();
    const MacdonaldTable &table = macdonald_table(n);
    if (!table.p_poly.empty()) return table.p_poly.at(lambda);
    std::lock_guard<std::mutex> lock(g_mac_mutex);
    auto &basis = g_p_bases[n];
    if (basis.empty()) basis = build_p_basis(n);
    return basis.at(lambda);
}

SymFunc macdonald_J(const Partition &mu) {
    SymFunc j = macdonald_P(mu).scaled(j_normalizer(mu));
    for (const auto &[lambda, c] : j.to_basis(SymBasis::Monomial))
        if (!c.is_polynomial() || !c.num().has_integer_coeffs() ||
            !is_integer(c.coeff()))
            fail(ErrorCode::IntegralityViolation,
                 "J_" + mu.to_string() + " monomial coefficient at " +
                     lambda.to_string() + " is not integral");
    return j;
}

SymFunc h_tilde(const Partition &mu) {
    return macdonald_table(mu.size()).h(mu);
}

std::map<Partition, QtFraction> expand_in_htilde(const SymFunc &f) {
    const MacdonaldTable &table = macdonald_table(f.degree());
    const StarData &star = star_data(table);
    // <f, H~_mu>_* = hall(omega(f[Z(1-q)(1-t)]), H~_mu): transform f once
    // and the rest are Schur dot products.
    SymFunc g = f.plethys_sub(star_multiplier()).dual();
    std::map<Partition, QtFraction> out;
    for (std::size_t i = 0; i < table.mus.size(); ++i) {
        QtFraction c = hall_inner(g, table.h(table.mus[i])) / star.norm[i];
        if (!c.is_zero()) out.emplace(table.mus[i], std::move(c));
    }
    if (!(combine_htilde(table, out) == f))
        fail(ErrorCode::SingularMatrix,
             "H~ expansion failed to resubstitute");
    return out;
}

SymFunc nabla(const SymFunc &f) {
    const MacdonaldTable &table = macdonald_table(f.degree());
    std::map<Partition, QtFraction> coeffs = expand_in_htilde(f);
    for (auto &[mu, c] : coeffs)
        c *= QtFraction::from_laurent(t_mu(mu));
    return combine_htilde(table, coeffs);
}

SymFunc delta_f(const SymFunc &f, const SymFunc &g) {
    const MacdonaldTable &table = macdonald_table(g.degree());
    std::map<Partition, QtFraction> coeffs = expand_in_htilde(g);
    for (auto &[mu, c] : coeffs)
        c *= QtFraction::from_laurent(f.eval_alphabet(b_mu(mu)));
    return combine_htilde(table, coeffs);
}

} // namespace qth
