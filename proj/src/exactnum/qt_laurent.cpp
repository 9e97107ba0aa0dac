#include "exactnum/qt_laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qth {

void QtLaurent::add_term(int qe, int te, const BigRational &c) {
    if (qth::is_zero(c)) return;
    QtExp e{qe, te};
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (qth::is_zero(it->second)) terms_.erase(it);
    }
}

bool QtLaurent::has_integer_coeffs() const {
    for (const auto &[e, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

bool QtLaurent::has_nonneg_integer_coeffs() const {
    for (const auto &[e, c] : terms_)
        if (!is_integer(c) || sgn(c) < 0) return false;
    return true;
}

int QtLaurent::min_q_exp() const {
    int m = 0;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (first || e.qe < m) m = e.qe;
        first = false;
    }
    return m;
}

int QtLaurent::max_q_exp() const {
    // Comparator is descending lex with q major, so the first term has the
    // largest q exponent.
    return terms_.empty() ? 0 : terms_.begin()->first.qe;
}

int QtLaurent::min_t_exp() const {
    int m = 0;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (first || e.te < m) m = e.te;
        first = false;
    }
    return m;
}

int QtLaurent::max_t_exp() const {
    int m = 0;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (first || e.te > m) m = e.te;
        first = false;
    }
    return m;
}

int QtLaurent::total_degree() const {
    int m = 0;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        int d = e.qe + e.te;
        if (first || d > m) m = d;
        first = false;
    }
    return m;
}

const std::pair<const QtExp, BigRational> &QtLaurent::leading() const {
    if (terms_.empty()) fail(ErrorCode::Internal, "leading() of zero polynomial");
    return *terms_.begin();
}

QtLaurent QtLaurent::operator-() const {
    QtLaurent r;
    for (const auto &[e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QtLaurent &QtLaurent::operator+=(const QtLaurent &o) {
    for (const auto &[e, c] : o.terms_) add_term(e.qe, e.te, c);
    return *this;
}

QtLaurent &QtLaurent::operator-=(const QtLaurent &o) {
    for (const auto &[e, c] : o.terms_) add_term(e.qe, e.te, -c);
    return *this;
}

QtLaurent operator*(const QtLaurent &a, const QtLaurent &b) {
    QtLaurent r;
    if (a.is_zero() || b.is_zero()) return r;
    // Iterate the smaller operand outside.
    const QtLaurent &u = a.term_count() <= b.term_count() ? a : b;
    const QtLaurent &v = a.term_count() <= b.term_count() ? b : a;
    BigRational prod;
    for (const auto &[eu, cu] : u.terms_) {
        for (const auto &[ev, cv] : v.terms_) {
            prod = cu * cv;
            r.add_term(eu.qe + ev.qe, eu.te + ev.te, prod);
        }
    }
    return r;
}

void QtLaurent::scale(const BigRational &c) {
    if (qth::is_zero(c)) {
        terms_.clear();
        return;
    }
    for (auto &[e, v] : terms_) v *= c;
}

void QtLaurent::shift(int dq, int dt) {
    if (dq == 0 && dt == 0) return;
    TermMap shifted;
    for (const auto &[e, c] : terms_)
        shifted.emplace(QtExp{e.qe + dq, e.te + dt}, c);
    terms_ = std::move(shifted);
}

QtLaurent QtLaurent::scaled(const BigRational &c, int dq, int dt) const {
    QtLaurent r = *this;
    r.scale(c);
    r.shift(dq, dt);
    return r;
}

BigRational QtLaurent::content() const {
    if (terms_.empty()) return BigRational(0);
    BigInt num_gcd(0), den_lcm(1);
    for (const auto &[e, c] : terms_) {
        BigInt n = abs(c.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        BigInt d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    BigRational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

QtLaurent QtLaurent::primitive_part(BigRational *applied) const {
    if (terms_.empty()) {
        if (applied) *applied = 1;
        return *this;
    }
    BigRational c = content();
    if (sgn(leading().second) < 0) c = -c;
    BigRational inv = 1 / c;
    QtLaurent r = *this;
    r.scale(inv);
    if (applied) *applied = inv;
    return r;
}

QtLaurent QtLaurent::subst_q_one() const {
    QtLaurent r;
    for (const auto &[e, c] : terms_) r.add_term(0, e.te, c);
    return r;
}

QtLaurent QtLaurent::subst_t_one() const {
    QtLaurent r;
    for (const auto &[e, c] : terms_) r.add_term(e.qe, 0, c);
    return r;
}

QtLaurent QtLaurent::subst_t_qinv() const {
    QtLaurent r;
    for (const auto &[e, c] : terms_) r.add_term(e.qe - e.te, 0, c);
    return r;
}

QtLaurent QtLaurent::subst_t_inv() const {
    QtLaurent r;
    for (const auto &[e, c] : terms_) r.add_term(e.qe, -e.te, c);
    return r;
}

QtLaurent QtLaurent::swap_qt() const {
    QtLaurent r;
    for (const auto &[e, c] : terms_) r.add_term(e.te, e.qe, c);
    return r;
}

QtLaurent QtLaurent::power_subst(int k) const {
    if (k < 1) fail(ErrorCode::InvalidArgument, "power_subst needs k >= 1");
    QtLaurent r;
    for (const auto &[e, c] : terms_) r.add_term(e.qe * k, e.te * k, c);
    return r;
}

BigRational QtLaurent::eval(const BigRational &q, const BigRational &t) const {
    BigRational total(0);
    auto pow = [](const BigRational &base, int e) {
        if (e == 0) return BigRational(1);
        if (qth::is_zero(base)) {
            if (e < 0) fail(ErrorCode::DivisionByZero, "0 raised to negative power");
            return BigRational(0);
        }
        BigRational b = e < 0 ? BigRational(1) / base : base;
        int n = e < 0 ? -e : e;
        BigRational acc(1);
        for (int i = 0; i < n; ++i) acc *= b;
        return acc;
    };
    for (const auto &[e, c] : terms_) {
        BigRational term = c * pow(q, e.qe);
        term *= pow(t, e.te);
        total += term;
    }
    return total;
}

std::string QtLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        BigRational a = c;
        if (first) {
            if (sgn(a) < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool has_vars = e.qe != 0 || e.te != 0;
        if (!has_vars || !is_one(a)) {
            out << a.get_str();
            if (has_vars) out << "*";
        }
        if (e.qe != 0) {
            out << "q";
            if (e.qe != 1) out << "^" << e.qe;
            if (e.te != 0) out << "*";
        }
        if (e.te != 0) {
            out << "t";
            if (e.te != 1) out << "^" << e.te;
        }
    }
    return out.str();
}

bool try_divide(const QtLaurent &dividend, const QtLaurent &divisor,
                QtLaurent *quot) {
    if (divisor.is_zero())
        fail(ErrorCode::DivisionByZero, "division by zero polynomial");
    if (dividend.is_zero()) {
        if (quot) *quot = QtLaurent();
        return true;
    }
    // Monomials are units in the Laurent ring: strip the minimal exponents of
    // both operands and divide genuine polynomials, restoring the shift on the
    // quotient. Ordinary lex division then terminates (lex is a well-order on
    // nonnegative exponent pairs) and leading-monomial divisibility failing at
    // any step proves non-divisibility.
    int aq = dividend.min_q_exp(), at = dividend.min_t_exp();
    int bq = divisor.min_q_exp(), bt = divisor.min_t_exp();
    QtLaurent rem = dividend;
    rem.shift(-aq, -at);
    QtLaurent b = divisor;
    b.shift(-bq, -bt);
    const auto &blead = b.leading();
    QtLaurent q;
    while (!rem.is_zero()) {
        const auto &rlead = rem.leading();
        int dq = rlead.first.qe - blead.first.qe;
        int dt = rlead.first.te - blead.first.te;
        if (dq < 0 || dt < 0) return false;
        BigRational c = rlead.second / blead.second;
        q.add_term(dq, dt, c);
        rem -= b.scaled(c, dq, dt);
    }
    q.shift(aq - bq, at - bt);
    if (quot) *quot = std::move(q);
    return true;
}

QtLaurent div_exact(const QtLaurent &dividend, const QtLaurent &divisor) {
    QtLaurent q;
    if (!try_divide(dividend, divisor, &q))
        fail(ErrorCode::Internal, "exact polynomial division failed");
    return q;
}

} // namespace qth
