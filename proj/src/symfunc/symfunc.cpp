#include "symfunc/symfunc.hpp"

#include "exactnum/atoms.hpp"

#include <algorithm>
#include <functional>

namespace qth {

namespace {

void check_cap(int degree) {
    if (degree > symfunc_degree_cap())
        fail(ErrorCode::ResourceBound,
             "degree " + std::to_string(degree) +
                 " exceeds the symmetric-function cap " +
                 std::to_string(symfunc_degree_cap()) +
                 " (raise it with set_symfunc_degree_cap)");
}

std::vector<int> merge_parts(const std::vector<int> &a,
                             const std::vector<int> &b) {
    std::vector<int> m = a;
    m.insert(m.end(), b.begin(), b.end());
    std::sort(m.begin(), m.end(), std::greater<int>());
    return m;
}

struct FactoredInput {
    int col;
    const QtFraction *c;
    AtomRegistry::Factors den;
};

std::vector<FactoredInput> factor_inputs(const DegreeTable &table,
                                         const SymFunc::Coeffs &coeffs) {
    AtomRegistry &reg = AtomRegistry::instance();
    std::vector<FactoredInput> ins;
    ins.reserve(coeffs.size());
    for (const auto &[mu, c] : coeffs) {
        if (c.is_zero()) continue;
        FactoredInput in;
        in.col = table.index_of(mu);
        in.c = &c;
        if (!c.is_laurent_polynomial()) in.den = reg.factor(c.den()).factors;
        ins.push_back(std::move(in));
    }
    return ins;
}

} // namespace

void SymFunc::add_schur_term(const Partition &lambda, const QtFraction &c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.emplace(lambda, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymFunc SymFunc::zero(int degree) {
    if (degree < 0) fail(ErrorCode::InvalidArgument, "negative degree");
    SymFunc f;
    f.degree_ = degree;
    return f;
}

SymFunc SymFunc::schur(const Partition &lambda) {
    check_cap(lambda.size());
    SymFunc f;
    f.degree_ = lambda.size();
    f.coeffs_.emplace(lambda, QtFraction(1));
    return f;
}

SymFunc SymFunc::power(const Partition &rho) {
    return from_basis(rho.size(), {{rho, QtFraction(1)}}, SymBasis::Power);
}

SymFunc SymFunc::power_sum(int k) {
    if (k < 1) fail(ErrorCode::InvalidArgument, "power sums need k >= 1");
    return power(Partition({k}));
}

SymFunc SymFunc::elementary(int k) {
    if (k < 0) fail(ErrorCode::InvalidArgument, "negative elementary index");
    if (k == 0) return one();
    return from_basis(k, {{Partition({k}), QtFraction(1)}},
                      SymBasis::Elementary);
}

SymFunc SymFunc::homogeneous(int k) {
    if (k < 0) fail(ErrorCode::InvalidArgument, "negative homogeneous index");
    if (k == 0) return one();
    return from_basis(k, {{Partition({k}), QtFraction(1)}},
                      SymBasis::Homogeneous);
}

SymFunc SymFunc::monomial_sym(const Partition &lambda) {
    return from_basis(lambda.size(), {{lambda, QtFraction(1)}},
                      SymBasis::Monomial);
}

SymFunc SymFunc::from_basis(int degree, const Coeffs &coeffs, SymBasis b) {
    const DegreeTable &table = degree_table(degree);
    SymFunc f = zero(degree);
    if (b == SymBasis::Schur) {
        for (const auto &[mu, c] : coeffs) {
            table.index_of(mu); // degree check
            f.add_schur_term(mu, c);
        }
        return f;
    }
    const QMatrix &mat = table.to_schur.at(b);
    int n = static_cast<int>(table.mus.size());
    // Rational matrix times fraction vector, slot by slot over factored
    // denominators: each input denominator is factored once and the per-slot
    // sums pay no gcd until the final reduction.
    std::vector<FactoredInput> ins = factor_inputs(table, coeffs);
    for (int l = 0; l < n; ++l) {
        FactoredSum sum;
        for (const FactoredInput &in : ins) {
            const BigRational &m = mat[l][in.col];
            if (sgn(m) == 0) continue;
            sum.add(in.c->num(), in.c->coeff() * m, in.c->scale_q(),
                    in.c->scale_t(), in.den);
        }
        QtFraction v = sum.finish();
        if (!v.is_zero()) f.coeffs_.emplace(table.mus[l], std::move(v));
    }
    return f;
}

QtFraction SymFunc::schur_coeff(const Partition &lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? QtFraction() : it->second;
}

SymFunc::Coeffs SymFunc::to_basis(SymBasis b) const {
    if (b == SymBasis::Schur) return coeffs_;
    const DegreeTable &table = degree_table(degree_);
    const QMatrix &mat = table.from_schur.at(b);
    int n = static_cast<int>(table.mus.size());
    std::vector<FactoredInput> ins = factor_inputs(table, coeffs_);
    Coeffs out;
    for (int r = 0; r < n; ++r) {
        FactoredSum sum;
        for (const FactoredInput &in : ins) {
            const BigRational &m = mat[r][in.col];
            if (sgn(m) == 0) continue;
            sum.add(in.c->num(), in.c->coeff() * m, in.c->scale_q(),
                    in.c->scale_t(), in.den);
        }
        QtFraction c = sum.finish();
        if (!c.is_zero()) out.emplace(table.mus[r], std::move(c));
    }
    return out;
}

SymFunc SymFunc::operator-() const {
    SymFunc f = *this;
    for (auto &[lambda, c] : f.coeffs_) c = -c;
    return f;
}

SymFunc &SymFunc::operator+=(const SymFunc &o) {
    if (is_zero() && degree_ == 0) {
        *this = o;
        return *this;
    }
    if (o.is_zero() && o.degree_ == 0) return *this;
    if (degree_ != o.degree_)
        fail(ErrorCode::InvalidArgument,
             "cannot add symmetric functions of degrees " +
                 std::to_string(degree_) + " and " + std::to_string(o.degree_));
    for (const auto &[lambda, c] : o.coeffs_) add_schur_term(lambda, c);
    return *this;
}

SymFunc &SymFunc::operator-=(const SymFunc &o) { return *this += -o; }

SymFunc operator*(const SymFunc &a, const SymFunc &b) {
    int degree = a.degree() + b.degree();
    check_cap(degree);
    if (a.is_zero() || b.is_zero()) return SymFunc::zero(degree);
    SymFunc::Coeffs pa = a.to_basis(SymBasis::Power);
    SymFunc::Coeffs pb = b.to_basis(SymBasis::Power);
    SymFunc::Coeffs prod;
    for (const auto &[ra, ca] : pa)
        for (const auto &[rb, cb] : pb) {
            Partition merged(merge_parts(ra.parts(), rb.parts()));
            QtFraction c = ca * cb;
            auto [it, fresh] = prod.emplace(std::move(merged), c);
            if (!fresh) it->second += c;
        }
    return SymFunc::from_basis(degree, prod, SymBasis::Power);
}

SymFunc SymFunc::scaled(const QtFraction &c) const {
    SymFunc f = zero(degree_);
    if (c.is_zero()) return f;
    for (const auto &[lambda, a] : coeffs_) f.coeffs_.emplace(lambda, a * c);
    return f;
}

SymFunc SymFunc::dual() const {
    SymFunc f = zero(degree_);
    for (const auto &[lambda, c] : coeffs_)
        f.coeffs_.emplace(lambda.conjugate(), c);
    return f;
}

SymFunc SymFunc::plethys_sub(const QtFraction &r, CoeffTwist twist) const {
    if (r.is_zero())
        fail(ErrorCode::InvalidArgument, "alphabet multiplier must be nonzero");
    Coeffs p = to_basis(SymBasis::Power);
    Coeffs out;
    for (auto &[rho, c] : p) {
        QtFraction v = twist == CoeffTwist::InvertT ? c.subst_t_inv() : c;
        for (int k : rho.parts()) v *= r.substitute(SubstRule::PowerK, k);
        if (!v.is_zero()) out.emplace(rho, v);
    }
    return from_basis(degree_, out, SymBasis::Power);
}

QtLaurent SymFunc::eval_alphabet(const QtLaurent &alphabet) const {
    if (!alphabet.has_nonneg_integer_coeffs())
        fail(ErrorCode::InvalidArgument,
             "finite alphabets need nonnegative integer multiplicities");
    Coeffs p = to_basis(SymBasis::Power);
    std::map<int, QtFraction> psums;
    QtFraction total;
    for (const auto &[rho, c] : p) {
        QtFraction term = c;
        for (int k : rho.parts()) {
            auto it = psums.find(k);
            if (it == psums.end())
                it = psums
                         .emplace(k, QtFraction::from_laurent(
                                         alphabet.power_subst(k)))
                         .first;
            term *= it->second;
        }
        total += term;
    }
    if (!total.is_laurent_polynomial())
        fail(ErrorCode::NotExpandable,
             "evaluation at a finite alphabet left a nontrivial denominator");
    return total.to_laurent();
}

QtLaurent SymFunc::principal_spec(int m) const {
    if (m < 0) fail(ErrorCode::InvalidArgument, "principal_spec needs m >= 0");
    QtLaurent alphabet;
    for (int i = 0; i <= m; ++i) alphabet.add_term(i, 0, BigRational(1));
    return eval_alphabet(alphabet);
}

std::string SymFunc::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto &[lambda, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += "(" + c.to_string() + ")*";
        out += "s" + lambda.to_string();
    }
    return out;
}

QtFraction hall_inner(const SymFunc &f, const SymFunc &g) {
    if (f.degree() != g.degree() || f.is_zero() || g.is_zero())
        return QtFraction();
    QtFraction total;
    // Schur coordinates are orthonormal, so the pairing is a dot product.
    for (const auto &[lambda, a] : f.coeffs()) {
        QtFraction b = g.schur_coeff(lambda);
        if (!b.is_zero()) total += a * b;
    }
    return total;
}

QtFraction star_inner(const SymFunc &f, const SymFunc &g) {
    static const QtFraction m_factor = QtFraction::make(
        (QtLaurent(1) - QtLaurent::monomial(BigRational(1), 1, 0)) *
            (QtLaurent(1) - QtLaurent::monomial(BigRational(1), 0, 1)),
        QtLaurent(1));
    return hall_inner(f.plethys_sub(m_factor).dual(), g);
}

} // namespace qth
