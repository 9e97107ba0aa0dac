#include "characters/characters.hpp"

#include "combinatorics/catalan_paths.hpp"
#include "combinatorics/diagram_stats.hpp"
#include "combinatorics/parking.hpp"
#include "exactnum/atoms.hpp"
#include "support/error.hpp"

#include <map>
#include <mutex>

namespace qth {

namespace {

using Factors = AtomRegistry::Factors;

QtLaurent m_laurent() {
    QtLaurent q1 = QtLaurent(1) - QtLaurent::monomial(BigRational(1), 1, 0);
    QtLaurent t1 = QtLaurent(1) - QtLaurent::monomial(BigRational(1), 0, 1);
    return q1 * t1;
}

QtLaurent laurent_pow(const QtLaurent &base, int e) {
    QtLaurent out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

// h_n[Z/((1-q)(1-t))], the Frobenius series of the full polynomial ring.
SymFunc plethysm_R0(int n) {
    return SymFunc::homogeneous(n).plethys_sub(
        QtFraction::make(QtLaurent(1), m_laurent()));
}

// Factored form of the fixed-point denominator, cached across every sum that
// touches the same partition. All its factors are differences q^A - t^B or
// binomials 1 - q^A t^B after clearing the negative exponents, so the
// registry splits it completely.
AtomRegistry::Split loc_den_split(const Partition &mu) {
    static std::mutex mutex;
    static std::map<Partition, AtomRegistry::Split> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(mu);
    if (it == cache.end()) {
        AtomRegistry &reg = AtomRegistry::instance();
        reg.seed_binomials(mu.size() + 1);
        reg.seed_differences(mu.size() + 1);
        it = cache.emplace(mu, reg.factor(loc_denominator(mu))).first;
    }
    return it->second;
}

// Adds c / extra to the sum, with extra given in factored form.
void add_over(FactoredSum &sum, AtomRegistry &reg, const QtFraction &c,
              const AtomRegistry::Split &extra) {
    AtomRegistry::Split dc = reg.factor(c.den());
    sum.add(c.num(), c.coeff() / (dc.coeff * extra.coeff),
            c.scale_q() - dc.sq - extra.sq, c.scale_t() - dc.st - extra.st,
            merge_factors(dc.factors, extra.factors));
}

SymFunc settle(const std::string &what, const SymFunc &a, const SymFunc &b,
               std::string *mismatch) {
    if (a == b) return a;
    std::string msg = what + ": independent routes disagree";
    if (!mismatch) fail(ErrorCode::RouteMismatch, msg);
    *mismatch += msg + "\n";
    return a;
}

} // namespace

SymFunc localization_sum(
    int n, const std::function<SymFunc(const Partition &)> &numerator) {
    AtomRegistry &reg = AtomRegistry::instance();
    const DegreeTable &table = degree_table(n);
    std::vector<FactoredSum> slots(table.mus.size());
    for (const Partition &mu : table.mus) {
        AtomRegistry::Split d = loc_den_split(mu);
        SymFunc num = numerator(mu);
        if (num.degree() != n && !num.is_zero())
            fail(ErrorCode::InvalidArgument,
                 "localization_sum: numerator degree mismatch at mu = " +
                     mu.to_string());
        for (const auto &[lambda, c] : num.coeffs())
            add_over(slots[table.index_of(lambda)], reg, c, d);
    }
    SymFunc::Coeffs out;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].empty()) continue;
        QtFraction v = slots[i].finish();
        if (!v.is_zero()) out.emplace(table.mus[i], std::move(v));
    }
    return SymFunc::from_basis(n, out, SymBasis::Schur);
}

SymFunc frob_R(int n, int l, std::string *mismatch) {
    if (n < 1 || l < 0)
        fail(ErrorCode::InvalidArgument, "frob_R needs n >= 1, l >= 0");
    const MacdonaldTable &table = macdonald_table(n);
    SymFunc by_sum = localization_sum(n, [&](const Partition &mu) {
        return table.h(mu).scaled(
            QtFraction::from_laurent(laurent_pow(b_mu(mu), l)));
    });
    SymFunc by_delta = plethysm_R0(n);
    for (int i = 0; i < l; ++i)
        by_delta = delta_f(SymFunc::elementary(1), by_delta);
    return settle("frob_R(" + std::to_string(n) + "," + std::to_string(l) + ")",
                  by_sum, by_delta, mismatch);
}

SymFunc frob_Rn(int n, std::string *mismatch) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "frob_Rn needs n >= 1");
    const MacdonaldTable &table = macdonald_table(n);
    QtLaurent m = m_laurent();
    SymFunc by_sum = localization_sum(n, [&](const Partition &mu) {
        return table.h(mu).scaled(
            QtFraction::from_laurent(m * pi_mu(mu) * b_mu(mu)));
    });
    SymFunc by_nabla = nabla(SymFunc::elementary(n));
    SymFunc out =
        settle("frob_Rn(" + std::to_string(n) + ")", by_sum, by_nabla, mismatch);
    for (const auto &[lambda, c] : out.coeffs())
        if (!c.is_polynomial() || !c.to_laurent().has_nonneg_integer_coeffs())
            fail(ErrorCode::PositivityViolation,
                 "frob_Rn: coefficient of s_" + lambda.to_string() +
                     " is not in N[q,t]");
    return out;
}

QtLaurent qt_catalan(int n, CatalanMethod method) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "qt_catalan needs n >= 1");
    switch (method) {
    case CatalanMethod::Inner: {
        QtFraction v =
            hall_inner(SymFunc::elementary(n), nabla(SymFunc::elementary(n)));
        if (!v.is_laurent_polynomial())
            fail(ErrorCode::Internal, "qt_catalan: inner product not reduced");
        return v.to_laurent();
    }
    case CatalanMethod::Sum: {
        QtLaurent m = m_laurent();
        FactoredSum sum;
        for (const Partition &mu : partitions_of(n)) {
            AtomRegistry::Split d = loc_den_split(mu);
            sum.add(t_mu(mu) * m * pi_mu(mu) * b_mu(mu),
                    BigRational(1) / d.coeff, -d.sq, -d.st, d.factors);
        }
        QtFraction v = sum.finish();
        if (!v.is_laurent_polynomial())
            fail(ErrorCode::Internal, "qt_catalan: closed sum not reduced");
        return v.to_laurent();
    }
    case CatalanMethod::Combinatorial: {
        QtLaurent total;
        for (const DyckSeq &p : dyck_enumerate(n))
            total += QtLaurent::monomial(BigRational(1), p.dinv, p.area);
        return total;
    }
    }
    fail(ErrorCode::InvalidArgument, "qt_catalan: unknown method");
}

QtLaurent qt_catalan(int n, std::string *mismatch) {
    QtLaurent inner = qt_catalan(n, CatalanMethod::Inner);
    QtLaurent sum = qt_catalan(n, CatalanMethod::Sum);
    QtLaurent comb = qt_catalan(n, CatalanMethod::Combinatorial);
    if (!(inner == sum) || !(inner == comb)) {
        std::string msg =
            "qt_catalan(" + std::to_string(n) + "): methods disagree";
        if (!mismatch) fail(ErrorCode::RouteMismatch, msg);
        *mismatch += msg + "\n";
    }
    return inner;
}

QtFraction hilbert_of(const SymFunc &f) {
    return hall_inner(SymFunc::power(Partition::single_column(f.degree())), f);
}

QtFraction hilbert_R(int n, int l, std::string *mismatch) {
    if (n < 1 || l < 0)
        fail(ErrorCode::InvalidArgument, "hilbert_R needs n >= 1, l >= 0");
    SymFunc f = plethysm_R0(n);
    for (int i = 0; i < l; ++i) f = delta_f(SymFunc::elementary(1), f);
    QtFraction direct = hilbert_of(f);

    SymFunc g = SymFunc::power(Partition::single_column(n)); // s_1^n
    for (int i = 0; i < l; ++i) g = delta_f(SymFunc::elementary(1), g);
    QtFraction adjoint = hall_inner(SymFunc::elementary(n), g) /
                         QtFraction::from_laurent(laurent_pow(m_laurent(), n));
    if (!(direct == adjoint)) {
        std::string msg = "hilbert_R(" + std::to_string(n) + "," +
                          std::to_string(l) + "): forms disagree";
        if (!mismatch) fail(ErrorCode::RouteMismatch, msg);
        *mismatch += msg + "\n";
    }
    return direct;
}

SpecCheckReport check_tq_inverse(int n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "check_tq_inverse needs n >= 1");
    SymFunc f = frob_Rn(n);
    const int shift = n * (n - 1) / 2;
    QtLaurent qn1; // [n+1]_q
    for (int i = 0; i <= n; ++i) qn1.add_term(i, 0, BigRational(1));

    // Schur side: every coefficient of frob_Rn is already a polynomial, so
    // the substitution happens after full cancellation. The right-hand side
    // is the dual Cauchy kernel e_n[Z(1-q^{n+1})/(1-q)] / [n+1]_q, so the
    // s_lambda coefficient carries the principal specialization of the
    // conjugate shape.
    for (const Partition &lambda : partitions_of(n)) {
        QtLaurent lhs = f.schur_coeff(lambda).to_laurent().subst_t_qinv();
        lhs.shift(shift, 0);
        QtFraction rhs = QtFraction::make(
            SymFunc::schur(lambda.conjugate()).principal_spec(n), qn1);
        if (!(QtFraction::from_laurent(lhs) == rhs))
            fail(ErrorCode::IdentityFails,
                 "t=1/q: Schur coefficient of s_" + lambda.to_string() +
                     " deviates from the principal specialization");
    }

    QtLaurent hl = hilbert_of(f).to_laurent().subst_t_qinv();
    hl.shift(shift, 0);
    if (!(hl == laurent_pow(qn1, n - 1)))
        fail(ErrorCode::IdentityFails,
             "t=1/q: Hilbert series is not (1+q+...+q^n)^(n-1)");
    SpecCheckReport report;
    report.hilbert = hl;
    report.dimension =
        QtFraction::from_laurent(hl).eval(BigRational(1), BigRational(1))
            .get_num();
    return report;
}

SpecCheckReport check_t1_parking(int n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "check_t1_parking needs n >= 1");
    SymFunc f = frob_Rn(n);
    SymFunc::Coeffs at_one;
    for (const auto &[lambda, c] : f.coeffs())
        at_one.emplace(lambda,
                       QtFraction::from_laurent(c.to_laurent().subst_t_one()));
    SymFunc left = SymFunc::from_basis(n, at_one, SymBasis::Schur);

    // Sign-twisted parking character through the characteristic map: the
    // p_rho coefficient is sign(rho)/z_rho times the weight enumerator of the
    // parking functions fixed by a permutation of cycle type rho.
    SymFunc::Coeffs pcoeffs;
    for (const auto &[rho, by_weight] : parking_fixed_counts(n)) {
        QtLaurent gen;
        for (const auto &[w, count] : by_weight)
            gen.add_term(w, 0, BigRational(count));
        BigRational scale =
            BigRational((n - rho.num_parts()) % 2 ? -1 : 1) /
            BigRational(centralizer_order(rho));
        pcoeffs.emplace(rho, QtFraction(scale) * QtFraction::from_laurent(gen));
    }
    SymFunc right = SymFunc::from_basis(n, pcoeffs, SymBasis::Power);
    if (!(left == right))
        fail(ErrorCode::IdentityFails,
             "t=1: Frobenius series does not match the parking-function "
             "character");

    SpecCheckReport report;
    report.hilbert = hilbert_of(f).to_laurent().subst_t_one();
    report.dimension = QtFraction::from_laurent(report.hilbert)
                           .eval(BigRational(1), BigRational(1))
                           .get_num();
    return report;
}

SymFunc frob_S(int n, int l, const Partition &nu, std::string *mismatch) {
    if (n < 1 || nu.size() != l)
        fail(ErrorCode::InvalidArgument, "frob_S needs n >= 1 and |nu| = l");
    const MacdonaldTable &table = macdonald_table(n);
    SymFunc snu = SymFunc::schur(nu);
    QtLaurent m = m_laurent();
    SymFunc by_sum = localization_sum(n, [&](const Partition &mu) {
        QtLaurent b = b_mu(mu);
        return table.h(mu).scaled(QtFraction::from_laurent(
            m * pi_mu(mu) * b * snu.eval_alphabet(b)));
    });
    SymFunc by_delta = delta_f(snu, nabla(SymFunc::elementary(n)));
    return settle("frob_S(" + std::to_string(n) + "," + nu.to_string() + ")",
                  by_sum, by_delta, mismatch);
}

SymFunc frob_R_nu(int n, int l, const Partition &nu, std::string *mismatch) {
    if (n < 1 || nu.size() != l)
        fail(ErrorCode::InvalidArgument, "frob_R_nu needs n >= 1 and |nu| = l");
    const MacdonaldTable &table = macdonald_table(n);
    SymFunc snu = SymFunc::schur(nu);
    SymFunc by_sum = localization_sum(n, [&](const Partition &mu) {
        return table.h(mu).scaled(
            QtFraction::from_laurent(snu.eval_alphabet(b_mu(mu))));
    });
    SymFunc by_delta = delta_f(snu, plethysm_R0(n));
    return settle("frob_R_nu(" + std::to_string(n) + "," + nu.to_string() + ")",
                  by_sum, by_delta, mismatch);
}

DeltaReport delta_snu_en(int n, const Partition &nu) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "delta_snu_en needs n >= 1");
    DeltaReport report;
    report.value = delta_f(SymFunc::schur(nu), SymFunc::elementary(n));
    report.schur_positive = true;
    for (const auto &[lambda, c] : report.value.coeffs()) {
        if (!c.is_polynomial())
            fail(ErrorCode::PolynomialityFails,
                 "delta_snu_en: coefficient of s_" + lambda.to_string() +
                     " is not a polynomial");
        if (!c.to_laurent().has_nonneg_integer_coeffs())
            report.schur_positive = false;
    }
    return report;
}

} // namespace qth
