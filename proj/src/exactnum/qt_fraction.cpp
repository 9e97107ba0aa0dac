#include "exactnum/qt_fraction.hpp"

#include <sstream>

namespace qth {

QtFraction QtFraction::make_coprime(const BigRational &coeff, int sq, int st,
                                    const QtLaurent &num, const QtLaurent &den) {
    if (den.is_zero())
        fail(ErrorCode::DivisionByZero, "fraction with zero denominator");
    QtFraction f;
    if (qth::is_zero(coeff) || num.is_zero()) return f; // canonical zero
    f.coeff_ = coeff;
    f.sq_ = sq + num.min_q_exp() - den.min_q_exp();
    f.st_ = st + num.min_t_exp() - den.min_t_exp();

    QtLaurent n = num;
    n.shift(-num.min_q_exp(), -num.min_t_exp());
    QtLaurent d = den;
    d.shift(-den.min_q_exp(), -den.min_t_exp());

    BigRational applied_n, applied_d;
    n = n.primitive_part(&applied_n);
    d = d.primitive_part(&applied_d);
    f.coeff_ *= applied_d;
    f.coeff_ /= applied_n;

    f.num_ = std::move(n);
    f.den_ = std::move(d);
    return f;
}

QtFraction QtFraction::make_scaled(const BigRational &coeff, int sq, int st,
                                   const QtLaurent &num, const QtLaurent &den) {
    QtFraction f = make_coprime(coeff, sq, st, num, den);
    if (f.is_zero()) return f;
    QtLaurent g = qt_gcd(f.num_, f.den_);
    if (!(g == QtLaurent(1))) {
        // Quotients of primitives by their primitive gcd stay primitive with
        // a positive leading coefficient, so no renormalization is needed.
        f.num_ = div_exact(f.num_, g);
        f.den_ = div_exact(f.den_, g);
    }
    return f;
}

QtFraction QtFraction::make(const QtLaurent &num, const QtLaurent &den) {
    return make_scaled(BigRational(1), 0, 0, num, den);
}

QtFraction QtFraction::from_laurent(const QtLaurent &p) {
    return make_scaled(BigRational(1), 0, 0, p, QtLaurent(1));
}

QtFraction QtFraction::monomial(const BigRational &c, int qe, int te) {
    QtFraction f;
    if (qth::is_zero(c)) return f;
    f.coeff_ = c;
    f.sq_ = qe;
    f.st_ = te;
    return f;
}

QtLaurent QtFraction::to_laurent() const {
    if (!is_laurent_polynomial())
        fail(ErrorCode::Internal, "to_laurent on a proper fraction");
    if (is_zero()) return QtLaurent();
    return num_.scaled(coeff_, sq_, st_);
}

QtFraction QtFraction::operator-() const {
    QtFraction f = *this;
    f.coeff_ = -f.coeff_;
    return f;
}

QtFraction operator+(const QtFraction &a, const QtFraction &b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int mq = std::min(a.sq_, b.sq_);
    int mt = std::min(a.st_, b.st_);
    QtLaurent g = qt_gcd(a.den_, b.den_);
    QtLaurent bden_red = div_exact(b.den_, g);
    QtLaurent aden_red = div_exact(a.den_, g);
    QtLaurent den = a.den_ * bden_red;
    QtLaurent lhs = a.num_ * bden_red;
    lhs.scale(a.coeff_);
    lhs.shift(a.sq_ - mq, a.st_ - mt);
    QtLaurent rhs = b.num_ * aden_red;
    rhs.scale(b.coeff_);
    rhs.shift(b.sq_ - mq, b.st_ - mt);
    lhs += rhs;
    return QtFraction::make_scaled(BigRational(1), mq, mt, lhs, den);
}

QtFraction operator-(const QtFraction &a, const QtFraction &b) {
    return a + (-b);
}

QtFraction operator*(const QtFraction &a, const QtFraction &b) {
    if (a.is_zero() || b.is_zero()) return QtFraction();
    // Cross-cancel: products of pairwise coprime primitives stay canonical,
    // so no further gcd is needed afterwards.
    QtLaurent an = a.num_, bd = b.den_;
    QtLaurent g1 = qt_gcd(an, bd);
    if (!(g1 == QtLaurent(1))) {
        an = div_exact(an, g1);
        bd = div_exact(bd, g1);
    }
    QtLaurent bn = b.num_, ad = a.den_;
    QtLaurent g2 = qt_gcd(bn, ad);
    if (!(g2 == QtLaurent(1))) {
        bn = div_exact(bn, g2);
        ad = div_exact(ad, g2);
    }
    QtFraction f;
    f.coeff_ = a.coeff_ * b.coeff_;
    f.sq_ = a.sq_ + b.sq_;
    f.st_ = a.st_ + b.st_;
    f.num_ = an * bn;
    f.den_ = ad * bd;
    return f;
}

QtFraction QtFraction::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    QtFraction f;
    f.coeff_ = 1 / coeff_;
    f.sq_ = -sq_;
    f.st_ = -st_;
    f.num_ = den_;
    f.den_ = num_;
    // num/den swapped: both stay primitive with positive leading coefficient,
    // but minimal exponents are already zero, so the form is still canonical.
    return f;
}

QtFraction operator/(const QtFraction &a, const QtFraction &b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
    return a * b.inverse();
}

QtFraction QtFraction::pow(int e) const {
    if (e == 0) return QtFraction(1);
    QtFraction base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    QtFraction acc(1);
    for (int i = 0; i < n; ++i) acc *= base;
    return acc;
}

QtFraction QtFraction::substitute(SubstRule rule, int k) const {
    if (is_zero()) return QtFraction();
    switch (rule) {
    case SubstRule::TOne: {
        QtLaurent d = den_.subst_t_one();
        if (d.is_zero())
            fail(ErrorCode::DenominatorVanishes,
                 "denominator vanishes at t = 1; cancel symbolically first");
        QtLaurent n = num_.subst_t_one();
        return make_scaled(coeff_, sq_, 0, n, d);
    }
    case SubstRule::QOne: {
        QtLaurent d = den_.subst_q_one();
        if (d.is_zero())
            fail(ErrorCode::DenominatorVanishes,
                 "denominator vanishes at q = 1; cancel symbolically first");
        QtLaurent n = num_.subst_q_one();
        return make_scaled(coeff_, 0, st_, n, d);
    }
    case SubstRule::TQInv: {
        QtLaurent d = den_.subst_t_qinv();
        if (d.is_zero())
            fail(ErrorCode::DenominatorVanishes,
                 "denominator vanishes at t = q^{-1}; cancel symbolically first");
        QtLaurent n = num_.subst_t_qinv();
        return make_scaled(coeff_, sq_ - st_, 0, n, d);
    }
    case SubstRule::PowerK: {
        if (k < 1) fail(ErrorCode::InvalidArgument, "PowerK needs k >= 1");
        return make_scaled(coeff_, sq_ * k, st_ * k, num_.power_subst(k),
                           den_.power_subst(k));
    }
    }
    fail(ErrorCode::InvalidArgument, "unknown substitution rule");
}

QtFraction QtFraction::subst_t_inv() const {
    if (is_zero()) return QtFraction();
    return make_scaled(coeff_, sq_, -st_, num_.subst_t_inv(),
                       den_.subst_t_inv());
}

QtFraction QtFraction::swap_qt() const {
    if (is_zero()) return QtFraction();
    return make_scaled(coeff_, st_, sq_, num_.swap_qt(), den_.swap_qt());
}

BigRational QtFraction::eval(const BigRational &q, const BigRational &t) const {
    if (is_zero()) return BigRational(0);
    BigRational d = den_.eval(q, t);
    if (qth::is_zero(d))
        fail(ErrorCode::DenominatorVanishes, "denominator vanishes at the point");
    BigRational n = num_.eval(q, t);
    BigRational mono = QtLaurent::monomial(BigRational(1), sq_, st_).eval(q, t);
    BigRational out = coeff_ * mono;
    out *= n;
    out /= d;
    return out;
}

std::string QtFraction::to_string() const {
    if (is_zero()) return "0";
    if (is_laurent_polynomial()) return to_laurent().to_string();
    std::ostringstream out;
    QtLaurent scaled_num = num_.scaled(coeff_, std::max(sq_, 0), std::max(st_, 0));
    bool num_simple = scaled_num.term_count() == 1;
    std::string ns = scaled_num.to_string();
    out << (num_simple ? ns : "(" + ns + ")");
    if (sq_ < 0 || st_ < 0) {
        out << "/";
        bool both = sq_ < 0 && st_ < 0;
        if (both) out << "(";
        if (sq_ < 0) {
            out << "q";
            if (sq_ != -1) out << "^" << -sq_;
            if (st_ < 0) out << "*";
        }
        if (st_ < 0) {
            out << "t";
            if (st_ != -1) out << "^" << -st_;
        }
        if (both) out << ")";
    }
    out << "/(" << den_.to_string() << ")";
    return out.str();
}

std::map<std::pair<int, int>, BigRational> series_truncate(const QtFraction &f,
                                                           int bound) {
    std::map<std::pair<int, int>, BigRational> out;
    if (bound < 0) return out;
    if (f.is_zero()) return out;
    if (f.scale_q() < 0 || f.scale_t() < 0)
        fail(ErrorCode::NotExpandable,
             "negative monomial scale; no power-series expansion");
    BigRational d0 = f.den().coeff(0, 0);
    if (qth::is_zero(d0))
        fail(ErrorCode::NotExpandable,
             "denominator constant term is zero; no power-series expansion");

    // Invert the denominator as a power series and convolve with the
    // numerator, degree slice by degree slice: inv[(i,j)] satisfies
    // sum_{(a,b)<=(i,j)} den[(a,b)] * inv[(i-a,j-b)] = [i=j=0].
    std::map<std::pair<int, int>, BigRational> inv;
    for (int total = 0; total <= bound; ++total) {
        for (int i = 0; i <= total; ++i) {
            int j = total - i;
            BigRational acc = (total == 0) ? BigRational(1) : BigRational(0);
            for (const auto &[e, c] : f.den().terms()) {
                if (e.qe == 0 && e.te == 0) continue;
                if (e.qe > i || e.te > j) continue;
                auto it = inv.find({i - e.qe, j - e.te});
                if (it == inv.end()) continue;
                BigRational prod = c * it->second;
                acc -= prod;
            }
            acc /= d0;
            if (!qth::is_zero(acc)) inv.emplace(std::make_pair(i, j), acc);
        }
    }

    for (const auto &[e, c] : f.num().terms()) {
        for (const auto &[ij, ic] : inv) {
            int qe = e.qe + ij.first + f.scale_q();
            int te = e.te + ij.second + f.scale_t();
            if (qe + te > bound) continue;
            BigRational add = c * ic;
            add *= f.coeff();
            auto [it, fresh] = out.try_emplace({qe, te}, add);
            if (!fresh) {
                it->second += add;
                if (qth::is_zero(it->second)) out.erase(it);
            }
        }
    }
    return out;
}

} // namespace qth
